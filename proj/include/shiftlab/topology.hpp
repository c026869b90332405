#pragma once

// Layer-wise shifting of simplicial complexes and Betti numbers.
//
// Betti numbers are non-reduced throughout (beta_0 counts components). The
// counting formulas for near cones and for full shifts give reduced values;
// they are converted by adding 1 in degree 0.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "shiftlab/combstruct.hpp"
#include "shiftlab/field_context.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/permutation.hpp"
#include "shiftlab/shiftgraph.hpp"

namespace shiftlab {

struct BettiVector {
  unsigned characteristic = 0;        // coefficient field
  std::vector<std::uint64_t> betti;   // beta_0 .. beta_dim; empty for complexes without vertices

  // Compares the numbers only; 0-padded to a common length.
  friend bool operator==(const BettiVector& a, const BettiVector& b);
  std::string to_string() const;  // "(1,1,1)"
};

// Componentwise a >= b after 0-padding.
bool betti_geq(const BettiVector& a, const BettiVector& b);

// Every layer shifted with one evaluation of r(w). Throws InternalError if
// the result is not a complex or the f-vector changes.
SimplicialComplex shift_complex(const SimplicialComplex& k, const Permutation& w, const FieldContext& ctx);
// Same with an arbitrary generic matrix; a non-closed result is a
// PreconditionError here, since closure is only guaranteed for r(w).
SimplicialComplex shift_complex(const SimplicialComplex& k, const GenericMatrix& g, const FieldContext& ctx);

// beta_k = f_k - rank d_k - rank d_{k+1} over GF(p), or Q for characteristic 0.
BettiVector betti_numbers(const SimplicialComplex& k, unsigned characteristic);

// Rank of the boundary map from (k)-faces to (k-1)-faces; exposed for tests.
std::size_t boundary_rank(const SimplicialComplex& k, int dim, unsigned characteristic);

// Near cones: reduced beta_k = #{k-faces s : s u {1} not a face}. Throws
// PreconditionError unless is_near_cone(k).
BettiVector near_cone_betti(const SimplicialComplex& k, unsigned characteristic = 0);

// reduced beta_k = f_k - #{s in Delta(K^{k+1}) : 1 in s} - #{s in Delta(K^k) : 1 in s}
BettiVector betti_via_full_shift(const SimplicialComplex& k, const FieldContext& ctx);

// w >= c_n in the right weak order; sufficient for shift_complex(., w) to
// produce a near cone with unchanged Betti numbers.
bool preserves_betti_cert(const Permutation& w, unsigned n);

// Layer-wise combinatorial shift Gamma_t.
SimplicialComplex combinatorial_shift(const SimplicialComplex& k, const Permutation& t);

// Downward closure of 1..max_facets random faces of dimension <= max_dim on [n].
SimplicialComplex random_complex(unsigned n, unsigned max_facets, unsigned max_dim, std::mt19937_64& rng);

// ---- conjecture scans: report, never assert ----

struct ComplexInstance {
  std::string name;
  SimplicialComplex complex;
};

struct GraphInstance {
  std::string name;
  // PSG(n,k,m) when from is empty, otherwise the part reachable from *from
  unsigned n = 0, k = 0;
  std::size_t m = 0;
  std::optional<UniformHypergraph> from;
};

struct MonotonicityViolation {
  std::string instance;
  Permutation w;
  BettiVector before, after;
  SimplicialComplex shifted;
};

struct ComplexScanResult {
  std::string name;
  BettiVector betti;
  std::size_t shifts = 0;
  std::vector<Permutation> preserving;  // w with equal Betti numbers, one-line order
  std::size_t certified = 0;            // w passing preserves_betti_cert
  std::size_t certified_preserving = 0;
};

struct GraphScanResult {
  std::string name;
  std::size_t nodes = 0, edges = 0;
  bool acyclic = true;
  std::vector<UniformHypergraph> cycle;  // when not acyclic
};

struct ScanReport {
  unsigned characteristic = 0;
  std::vector<ComplexScanResult> complexes;
  std::vector<MonotonicityViolation> monotonicity_violations;
  std::vector<GraphScanResult> graphs;
  std::size_t acyclicity_violations = 0;
};

struct ScanOptions {
  unsigned parallelism = 1;
  std::uint64_t node_cap = 200000;
};

ScanReport conjecture_scan(const std::vector<ComplexInstance>& complexes, const std::vector<GraphInstance>& graphs,
                           const FieldContext& ctx, const ScanOptions& opts = {});
// Adds one already computed contracted graph to a report.
void scan_contracted(ScanReport& report, const std::string& name, const ContractedShiftGraph& g);

std::string scan_report_json(const ScanReport& r);

}  // namespace shiftlab
