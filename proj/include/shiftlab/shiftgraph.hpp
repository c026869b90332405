#pragma once

// Partial shift graphs: nodes are m-edge k-uniform hypergraphs on [n], with an
// edge S -> T labelled by every w such that Delta_{r(w)}(S) = T != S.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shiftlab/combstruct.hpp"
#include "shiftlab/field_context.hpp"
#include "shiftlab/permutation.hpp"

namespace shiftlab {

struct ShiftGraph {
  unsigned n = 0;
  unsigned k = 0;
  std::size_t m = 0;
  std::vector<UniformHypergraph> nodes;  // lex order
  // (source, target) -> witnesses, sorted by one-line notation
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Permutation>> edges;
  // topological order, set by certify_acyclic
  std::optional<std::vector<std::size_t>> acyclicity_certificate;

  std::optional<std::size_t> find(const UniformHypergraph& h) const;
  friend bool operator==(const ShiftGraph& a, const ShiftGraph& b) {
    return a.n == b.n && a.k == b.k && a.m == b.m && a.nodes == b.nodes && a.edges == b.edges;
  }
};

struct ContractedShiftGraph {
  std::vector<UniformHypergraph> nodes;  // shifted representatives, lex order
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted
};

struct GraphOptions {
  std::uint64_t node_cap = 200000;
  unsigned parallelism = 1;
};

// All of PSG(n, k, m). Throws PreconditionError when C(C(n,k), m) exceeds
// the cap (use build_psg_from instead).
ShiftGraph build_psg(unsigned n, unsigned k, std::size_t m, const FieldContext& ctx, const GraphOptions& opts = {});

// The part of the partial shift graph reachable from s.
ShiftGraph build_psg_from(const UniformHypergraph& s, const FieldContext& ctx, const GraphOptions& opts = {});

// Quotient by S ~ T iff Delta(S) = Delta(T), without self-loops.
ContractedShiftGraph contract(const ShiftGraph& g, const FieldContext& ctx);

std::vector<std::size_t> sinks(const ShiftGraph& g);

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<std::size_t> order;  // topological order when acyclic
  std::vector<std::size_t> cycle;  // v0 -> v1 -> ... -> v0 otherwise
};

AcyclicityReport check_acyclic(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);
AcyclicityReport check_acyclic(const ShiftGraph& g);
AcyclicityReport check_acyclic(const ContractedShiftGraph& g);
// Runs check_acyclic and stores the order in g on success.
bool certify_acyclic(ShiftGraph& g);

std::string export_dot(const ShiftGraph& g);
std::string export_json(const ShiftGraph& g);
ShiftGraph parse_shift_graph_json(const std::string& text);  // throws ParseError
std::string export_dot(const ContractedShiftGraph& g);
std::string export_json(const ContractedShiftGraph& g);

}  // namespace shiftlab
