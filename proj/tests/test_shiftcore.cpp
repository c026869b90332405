#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"

#include "shiftlab/error.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/shift.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using test::all_hypergraphs;
using test::hypergraph_from_string;

namespace {

FieldContext ctx(std::uint64_t p, Backend b = Backend::Randomized, std::uint64_t seed = 1) {
  return make_field_context(p, b, seed);
}

UniformHypergraph h4(const char* words) { return hypergraph_from_string(4, words); }

}  // namespace

TEST_CASE("worked example in characteristic 2: X, r(w0) symbolic and randomized") {
  const auto s = h4("12 23");
  const auto expect = h4("12 13");
  const auto sym = ctx(2, Backend::Symbolic);
  const auto rnd = ctx(2);
  CHECK(delta_shift(build_X(4), s, sym) == expect);
  CHECK(delta_shift(build_X(4), s, rnd) == expect);
  CHECK(partial_shift(s, Permutation::longest(4), sym) == expect);
  CHECK(partial_shift(s, Permutation::longest(4), rnd) == expect);
  CHECK(full_shift(s, rnd) == expect);
  // U w0 itself, not only the stored r(w0)
  const PolyRing ring(2);
  const auto uw0 = multiply(build_U(4), permutation_matrix(Permutation::longest(4)), ring);
  CHECK(delta_shift(uw0, s, sym) == expect);
}

TEST_CASE("trivial shifts") {
  for (auto p : {0UL, 2UL, 3UL}) {
    for (const auto& s : all_hypergraphs(4, 2, 3)) {
      CHECK(delta_shift(identity_generic(4), s, ctx(p)) == s);
      CHECK(partial_shift(s, Permutation::identity(4), ctx(p)) == s);
    }
  }
  const UniformHypergraph empty(5, 2, {});
  CHECK(full_shift(empty, ctx(0)).empty());
  CHECK(full_shift(empty, ctx(0, Backend::Symbolic)).empty());
}

TEST_CASE("shifted hypergraphs are fixed by the full shift") {
  for (const auto& s : all_hypergraphs(4, 2, 6)) {
    if (!is_shifted(s)) continue;
    CHECK(full_shift(s, ctx(0)) == s);
    CHECK(full_shift(s, ctx(2)) == s);
  }
}

TEST_CASE("Vandermonde matrix in characteristic 0") {
  const auto s = hypergraph_from_string(6, "123 145 246 356");
  CHECK(full_shift(s, ctx(0)) == hypergraph_from_string(6, "123 124 125 126"));
  CHECK(delta_shift(build_vandermonde(6), s, ctx(0)) == hypergraph_from_string(6, "123 124 125 134"));
}

TEST_CASE("full shift of the RP2 triangles depends on the characteristic") {
  const auto t = test::rp26_triangles();
  const auto q = full_shift(t, ctx(0));
  const auto f2 = full_shift(t, ctx(2));
  CHECK(q == hypergraph_from_string(6, "123 124 125 126 134 135 136 145 146 156"));
  CHECK(f2 == hypergraph_from_string(6, "123 124 125 126 134 135 136 145 146 234"));
  CHECK(is_shifted(q));
  CHECK(is_shifted(f2));
}

TEST_CASE("singular matrices are rejected") {
  Matrix<MultiPoly> m = identity_generic(3).entries();
  m(1, 1) = MultiPoly{};
  const GenericMatrix zero_row(m);
  const auto s = UniformHypergraph(3, 1, {test::sub("1")});
  CHECK_THROWS_AS(delta_shift(zero_row, s, ctx(0)), PreconditionError);
  CHECK_THROWS_AS(delta_shift(zero_row, s, ctx(2)), PreconditionError);
  CHECK_THROWS_AS(delta_shift(zero_row, s, ctx(0, Backend::Symbolic)), PreconditionError);

  // two equal rows of variables: nonconstant entries, determinant 0
  const PolyRing ring(0);
  Matrix<MultiPoly> e(2, 2);
  e(0, 0) = e(1, 0) = ring.variable(var(1, 1));
  e(0, 1) = e(1, 1) = ring.variable(var(1, 2));
  const GenericMatrix dup(e);
  const auto s2 = UniformHypergraph(2, 1, {test::sub("1")});
  for (auto b : {Backend::Symbolic, Backend::Randomized}) {
    CHECK_THROWS_WITH_AS(delta_shift(dup, s2, ctx(0, b)), "matrix not invertible", PreconditionError);
  }
  CHECK_THROWS_AS(delta_shift(build_X(3), test::rp26_triangles(), ctx(0)), PreconditionError);
}

TEST_CASE("combinatorial shift examples") {
  CHECK(combinatorial_shift(h4("23"), Permutation::simple(4, 1)) == h4("13"));
  CHECK(combinatorial_shift(h4("13 23"), Permutation::transposition(4, 1, 3)) == h4("12 13"));
  // 13 would move to 12, which is already there
  CHECK(combinatorial_shift(h4("12 13"), Permutation::simple(4, 2)) == h4("12 13"));
  CHECK_THROWS_AS(combinatorial_shift(h4("12"), Permutation::cycle(4)), PreconditionError);
  CHECK_THROWS_AS(combinatorial_shift(h4("12"), Permutation::identity(4)), PreconditionError);
}

TEST_CASE("gamma of an arbitrary transposition shifts combinatorially") {
  const auto sym = ctx(0, Backend::Symbolic);
  for (unsigned i = 1; i <= 4; ++i) {
    for (unsigned j = i + 1; j <= 4; ++j) {
      const auto t = Permutation::transposition(4, i, j);
      for (const auto& s : all_hypergraphs(4, 2, 3)) {
        CHECK(delta_shift(build_gamma(t), s, sym) == combinatorial_shift(s, t));
      }
    }
  }
}

TEST_CASE("U w gives the same shift as r(w)") {
  const PolyRing ring(0);
  std::mt19937_64 rng(5);
  const auto hs = all_hypergraphs(4, 2, 4);
  for (const auto& w : all_permutations(4)) {
    const auto uw = multiply(build_U(4), permutation_matrix(w), ring);
    for (int t = 0; t < 5; ++t) {
      const auto& s = hs[rng() % hs.size()];
      CHECK(delta_shift(uw, s, ctx(0)) == partial_shift(s, w, ctx(0)));
    }
  }
}

TEST_CASE("renaming the variables of r(w) does not change the shift") {
  const PolyRing ring(0);
  std::mt19937_64 rng(6);
  const auto hs = all_hypergraphs(4, 2, 4);
  for (const auto& w : all_permutations(4)) {
    // an injective relabelling onto fresh names x_{i+10, j+20}
    std::vector<unsigned> shuffle{1, 2, 3, 4};
    std::shuffle(shuffle.begin(), shuffle.end(), rng);
    const auto rename = [&](Var v) { return var(shuffle[v.row - 1] + 10U, v.col + 20U); };
    const auto r = build_r(w);
    const GenericMatrix renamed(
        map_matrix<MultiPoly>(r.entries(), [&](const MultiPoly& p) { return ring.rename(p, rename); }));
    CHECK(renamed.variables().size() == r.variables().size());
    for (int t = 0; t < 4; ++t) {
      const auto& s = hs[rng() % hs.size()];
      const auto expect = partial_shift(s, w, ctx(0));
      CHECK(delta_shift(renamed, s, ctx(0)) == expect);
      CHECK(delta_shift(renamed, s, ctx(0, Backend::Symbolic)) == expect);
    }
  }
}

TEST_CASE("shift profiles") {
  const auto s = test::rp26_triangles();
  const auto rp = shift_profile(build_r(Permutation::longest(6)), s, ctx(0));
  REQUIRE(rp.ranks.size() == 21);
  CHECK(rp.ranks.front() == 0);
  CHECK(rp.ranks.back() == 10);
  for (std::size_t i = 0; i + 1 < rp.ranks.size(); ++i) CHECK(rp.ranks[i + 1] - rp.ranks[i] <= 1);
  CHECK(rp.pivots.size() == 10);
}

TEST_CASE("one evaluation for many hypergraphs") {
  const auto hs = all_hypergraphs(4, 2, 3);
  for (auto p : {0UL, 2UL}) {
    for (const auto& w : {Permutation::longest(4), Permutation::cycle(4), Permutation::simple(4, 2)}) {
      const auto all = delta_shift_all(build_r(w), hs, ctx(p));
      REQUIRE(all.size() == hs.size());
      for (std::size_t i = 0; i < hs.size(); ++i) CHECK(all[i] == partial_shift(hs[i], w, ctx(p)));
    }
  }
}

TEST_CASE("seeds and the double-prime mode") {
  const auto t = test::rp26_triangles();
  const auto w = Permutation::from_word(6, {5, 4, 3, 2, 1});
  const auto base = partial_shift(t, w, ctx(0, Backend::Randomized, 1));
  for (std::uint64_t seed : {2UL, 3UL, 99UL}) CHECK(partial_shift(t, w, ctx(0, Backend::Randomized, seed)) == base);
  auto dp = ctx(0);
  dp.double_prime = true;
  CHECK(partial_shift(t, w, dp) == base);
  CHECK(partial_shift(t, w, ctx(0, Backend::Randomized, 1)) == base);
}

TEST_CASE("mismatched sizes") {
  CHECK_THROWS_AS(partial_shift(h4("12"), Permutation::identity(5), ctx(0)), PreconditionError);
  CHECK_THROWS_AS(delta_shift(build_X(5), h4("12"), ctx(0)), PreconditionError);
}

TEST_CASE("product of r(v) and r(w) against composed shifts (reported only)") {
  // Shifting with r(v) r(w) and shifting twice need not agree; count how often
  // they differ over the reduced factorizations of w0 in S_4.
  const PolyRing ring(0);
  const auto w0 = Permutation::longest(4);
  const auto hs = all_hypergraphs(4, 2, 3);
  std::size_t pairs = 0, differ = 0;
  for (const auto& v : all_permutations(4)) {
    const auto w = v.inverse() * w0;
    if (v.length() + w.length() != w0.length() || v.length() == 0 || w.length() == 0) continue;
    const auto prod = multiply(build_r(v), build_r(w), ring);
    for (const auto& s : hs) {
      const auto direct = delta_shift(prod, s, ctx(0));
      const auto composed = partial_shift(partial_shift(s, w, ctx(0)), v, ctx(0));
      ++pairs;
      if (!(direct == composed)) ++differ;
    }
  }
  MESSAGE("r(v)r(w) vs composed shifts: " << differ << " of " << pairs << " differ");
  CHECK(pairs > 0);
}
