#pragma once

// File formats. Vertices are 1-based everywhere.
//
//   hypergraph JSON  {"n":6,"k":3,"edges":[[1,2,3],...]}
//   complex JSON     {"n":6,"facets":[[1,2,5],...]}
//   text             one face per line, vertices separated by spaces;
//                    '#' starts a comment. n defaults to the largest vertex.
//   Betti JSON       {"char":0,"betti":[1,0,0]}
//
// All parse errors are reported as ParseError.

#include <optional>
#include <string>

#include "shiftlab/combstruct.hpp"
#include "shiftlab/topology.hpp"

namespace shiftlab::io {

UniformHypergraph parse_hypergraph(const std::string& text, std::optional<unsigned> n = std::nullopt);
SimplicialComplex parse_complex(const std::string& text, std::optional<unsigned> n = std::nullopt);

std::string hypergraph_json(const UniformHypergraph& h);
std::string hypergraph_text(const UniformHypergraph& h);
std::string complex_json(const SimplicialComplex& k);
std::string complex_text(const SimplicialComplex& k);  // facets
std::string betti_json(const BettiVector& b);

std::string read_file(const std::string& path);  // throws ParseError when unreadable

}  // namespace shiftlab::io
