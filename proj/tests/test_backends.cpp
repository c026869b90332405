// Symbolic and randomized backends against each other.

#include <vector>

#include "doctest.h"

#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/topology.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using test::all_hypergraphs;

namespace {

std::vector<UniformHypergraph> small_hypergraphs(unsigned n) {
  std::vector<UniformHypergraph> out;
  for (unsigned k = 1; k <= n; ++k) {
    for (auto& h : all_hypergraphs(n, k, 4)) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

TEST_CASE("partial shifts agree for every hypergraph with n <= 4, m <= 4 and every w") {
  for (auto p : {0UL, 2UL, 3UL}) {
    CAPTURE(p);
    const auto sym = make_field_context(p, Backend::Symbolic, 1);
    const auto rnd = make_field_context(p, Backend::Randomized, 1);
    std::size_t cases = 0;
    for (unsigned n = 1; n <= 4; ++n) {
      const auto hs = small_hypergraphs(n);
      for (const auto& w : all_permutations(n)) {
        const auto r = build_r(w);
        const auto a = shift_profiles(r, hs, sym);
        const auto b = shift_profiles(r, hs, rnd);
        REQUIRE(a.size() == hs.size());
        for (std::size_t i = 0; i < hs.size(); ++i) {
          CHECK(a[i] == b[i]);
          // one hypergraph at a time draws a different point
          if (n == 4 && i % 7 == 0) CHECK(partial_shift(hs[i], w, rnd) == delta_shift(r, hs[i], sym));
        }
        cases += hs.size();
      }
    }
    MESSAGE(cases << " (hypergraph, w) pairs");
  }
}

TEST_CASE("the all-variable matrix agrees on n <= 4") {
  for (auto p : {0UL, 2UL}) {
    const auto sym = make_field_context(p, Backend::Symbolic, 1);
    const auto rnd = make_field_context(p, Backend::Randomized, 1);
    for (unsigned n = 2; n <= 4; ++n) {
      const auto hs = all_hypergraphs(n, 2, 3);
      CHECK(delta_shift_all(build_X(n), hs, sym) == delta_shift_all(build_X(n), hs, rnd));
      CHECK(delta_shift_all(build_X(n), hs, rnd) == delta_shift_all(build_r(Permutation::longest(n)), hs, rnd));
    }
  }
}

TEST_CASE("five seeds agree on the RP2 table") {
  const std::vector<Permutation> ws{
      Permutation::longest(6),
      Permutation::longest(6) * Permutation::from_word(6, {1}),
      Permutation::longest(6) * Permutation::from_word(6, {4, 3, 2, 1}),
      Permutation::longest(6) * Permutation::from_word(6, {4, 2, 3, 2, 1}),
  };
  const auto rp = test::rp26();
  for (auto p : {0UL, 2UL}) {
    std::vector<std::vector<SimplicialComplex>> runs;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto c = make_field_context(p, Backend::Randomized, seed * 7919);
      std::vector<SimplicialComplex> row;
      for (const auto& w : ws) row.push_back(shift_complex(rp, w, c));
      runs.push_back(row);
    }
    for (std::size_t a = 0; a < runs.size(); ++a) {
      for (std::size_t b = a + 1; b < runs.size(); ++b) CHECK(runs[a] == runs[b]);
    }
  }
}

TEST_CASE("double-prime and exact integer modes agree") {
  auto exact = make_field_context(0, Backend::Randomized, 3);
  auto dp = exact;
  dp.double_prime = true;
  const auto hs = small_hypergraphs(4);
  for (const auto& w : all_permutations(4)) {
    CHECK(shift_profiles(build_r(w), hs, exact) == shift_profiles(build_r(w), hs, dp));
  }
}

TEST_CASE("a tiny epsilon still agrees") {
  const auto sym = make_field_context(2, Backend::Symbolic, 1);
  const auto tight = make_field_context(2, Backend::Randomized, 1, mpq_class(1, 1000000000));
  const auto loose = make_field_context(2, Backend::Randomized, 1, mpq_class(1, 2));
  const auto hs = all_hypergraphs(4, 2, 3);
  for (const auto& w : all_permutations(4)) {
    const auto expect = delta_shift_all(build_r(w), hs, sym);
    CHECK(delta_shift_all(build_r(w), hs, tight) == expect);
    // a loose budget may err, but only towards lex-later columns and never in size
    const auto rough = delta_shift_all(build_r(w), hs, loose);
    for (std::size_t i = 0; i < hs.size(); ++i) {
      CHECK(rough[i].size() == hs[i].size());
      CHECK(!hypergraph_lex_less(rough[i], expect[i]));
    }
  }
}
