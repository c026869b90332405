#pragma once

// Exterior shifts Delta_g(S): the lex-first basis of the column space of g^{^S}.

#include <cstdint>
#include <vector>

#include "shiftlab/combstruct.hpp"
#include "shiftlab/compound.hpp"
#include "shiftlab/field_context.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/permutation.hpp"
#include "shiftlab/rank_profile.hpp"

namespace shiftlab {

bool operator==(const RankProfile& a, const RankProfile& b);

// Schwartz-Zippel budget for one hypergraph: every pivot decision is the
// (non)vanishing of a minor of g^{^S} of degree <= deg(g) k |S|, and there
// are at most C(n,k) decisions.
mpz_class shift_degree_bound(unsigned degree, const UniformHypergraph& s);

// Rank profile of g^{^S} over the columns C([n],k) in lex order; pivots are
// positions in all_subsets(n, k).
RankProfile shift_profile(const GenericMatrix& g, const UniformHypergraph& s, const FieldContext& ctx);

UniformHypergraph delta_shift(const GenericMatrix& g, const UniformHypergraph& s, const FieldContext& ctx);

// Delta_g applied to several hypergraphs with one and the same evaluation of g
// (the randomized backend draws a single point for all of them).
std::vector<UniformHypergraph> delta_shift_all(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                               const FieldContext& ctx);
std::vector<RankProfile> shift_profiles(const GenericMatrix& g, const std::vector<UniformHypergraph>& hs,
                                        const FieldContext& ctx);

UniformHypergraph partial_shift(const UniformHypergraph& s, const Permutation& w, const FieldContext& ctx);
UniformHypergraph full_shift(const UniformHypergraph& s, const FieldContext& ctx);

// Gamma_t(S): sigma -> sigma.t when sigma.t < sigma and sigma.t is not in S.
UniformHypergraph combinatorial_shift(const UniformHypergraph& s, const Permutation& t);

// Image of a subset under a permutation.
Subset apply(const Permutation& w, Subset s);

// Delta over a concrete matrix in a field F (no randomness involved).
template <class F>
UniformHypergraph delta_shift_concrete(const F& field, const Matrix<typename F::Elem>& g, const UniformHypergraph& s) {
  const auto cols = all_subsets(s.n(), s.k());
  const auto rp = rank_profile(field, compound_rows(field, g, s), {}, s.size());
  std::vector<Subset> edges;
  for (auto p : rp.pivots) edges.push_back(cols[p]);
  return UniformHypergraph(s.n(), s.k(), std::move(edges));
}

}  // namespace shiftlab
