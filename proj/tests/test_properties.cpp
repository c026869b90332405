// Property suites. Each suite runs at least 1000 cases or is exhaustive; the
// case counts are checked at the end of each test.

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "doctest.h"

#include "shiftlab/compound.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/finite_field.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/number_theory.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/shiftgraph.hpp"
#include "shiftlab/topology.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using field::PrimeField;
using test::all_hypergraphs;

namespace {

using Mat = Matrix<std::uint64_t>;

FieldContext ctx(std::uint64_t p, std::uint64_t seed = 1) {
  return make_field_context(p, Backend::Randomized, seed);
}

Permutation random_perm(unsigned n, std::mt19937_64& rng) {
  return Permutation::from_index(n, rng() % factorial(n));
}

UniformHypergraph random_hypergraph(unsigned n, unsigned k, std::size_t max_m, std::mt19937_64& rng) {
  auto cols = all_subsets(n, k);
  std::shuffle(cols.begin(), cols.end(), rng);
  const std::size_t m = 1 + rng() % std::min(max_m, cols.size());
  cols.resize(m);
  return UniformHypergraph(n, k, cols);
}

Mat random_matrix(const PrimeField& f, unsigned n, std::mt19937_64& rng) {
  Mat m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m(i, j) = f.random(rng);
  }
  return m;
}

Mat random_invertible(const PrimeField& f, unsigned n, std::mt19937_64& rng) {
  for (;;) {
    auto m = random_matrix(f, n, rng);
    if (rank(f, m) == n) return m;
  }
}

Mat random_upper(const PrimeField& f, unsigned n, std::mt19937_64& rng) {
  Mat m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = i; j < n; ++j) m(i, j) = f.random(rng);
    while (m(i, i) == 0) m(i, i) = f.random(rng);
  }
  return m;
}

Mat random_diagonal(const PrimeField& f, unsigned n, std::mt19937_64& rng) {
  Mat m(n, n);
  for (unsigned i = 0; i < n; ++i) {
    while (m(i, i) == 0) m(i, i) = f.random(rng);
  }
  return m;
}

// r(w) at a random point
Mat evaluate_r(const PrimeField& f, const Permutation& w, std::mt19937_64& rng) {
  const auto r = build_r(w);
  EvalPoint<PrimeField> pt;
  for (auto v : r.variables()) pt.set(v, f.random(rng));
  return map_matrix<std::uint64_t>(r.entries(), [&](const MultiPoly& p) { return poly_eval(p, f, pt); });
}

Permutation random_certified(unsigned n, std::mt19937_64& rng) {
  for (;;) {
    auto w = random_perm(n, rng);
    if (preserves_betti_cert(w, n)) return w;
  }
}

// all hypergraphs on [4] of every edge size
std::vector<UniformHypergraph> everything_on_4() {
  std::vector<UniformHypergraph> out;
  for (unsigned k = 1; k <= 3; ++k) {
    for (auto& h : all_hypergraphs(4, k, 6)) {
      if (!h.empty()) out.push_back(std::move(h));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("cardinality") {
  std::mt19937_64 rng(71);
  const PrimeField f(prime_below_power_of_two(61));
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 2 + rng() % 5;
    const unsigned k = 1 + rng() % n;
    const auto s = random_hypergraph(n, k, 8, rng);
    const auto w = random_perm(n, rng);
    const std::uint64_t p = std::vector<std::uint64_t>{0, 2, 3, 5}[rng() % 4];
    CHECK(partial_shift(s, w, ctx(p, t)).size() == s.size());
    CHECK(delta_shift_concrete(f, random_invertible(f, n, rng), s).size() == s.size());
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("right B-invariance and diagonal invariance") {
  std::mt19937_64 rng(72);
  const PrimeField f(prime_below_power_of_two(61));
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 2 + rng() % 5;
    const unsigned k = 1 + rng() % n;
    const auto s = random_hypergraph(n, k, 6, rng);
    // half generic, half an evaluation of some r(w)
    const auto g = t % 2 ? random_invertible(f, n, rng) : evaluate_r(f, random_perm(n, rng), rng);
    const auto base = delta_shift_concrete(f, g, s);
    CHECK(delta_shift_concrete(f, multiply(f, g, random_upper(f, n, rng)), s) == base);
    CHECK(delta_shift_concrete(f, multiply(f, random_diagonal(f, n, rng), g), s) == base);
    CHECK(delta_shift_concrete(f, multiply(f, g, random_diagonal(f, n, rng)), s) == base);
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("compound functoriality, n <= 5") {
  std::mt19937_64 rng(73);
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const PrimeField f(std::vector<std::uint64_t>{2, 3, 101, prime_below_power_of_two(61)}[rng() % 4]);
    const unsigned n = 1 + rng() % 5;
    const unsigned k = rng() % (n + 1);
    const auto g = random_matrix(f, n, rng);
    const auto h = random_matrix(f, n, rng);
    CHECK(compound_matrix(f, multiply(f, g, h), k) ==
          multiply(f, compound_matrix(f, g, k), compound_matrix(f, h, k)));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("simple reflections shift combinatorially (exhaustive, n = 4, m <= 3)") {
  const auto sym = make_field_context(0, Backend::Symbolic, 1);
  std::size_t cases = 0;
  for (unsigned k = 1; k <= 3; ++k) {
    const auto hs = all_hypergraphs(4, k, 3);
    for (unsigned i = 1; i <= 3; ++i) {
      const auto s = Permutation::simple(4, i);
      const auto gamma = delta_shift_all(build_gamma(s), hs, sym);
      const auto viar = delta_shift_all(build_r(s), hs, ctx(0));
      const auto viar2 = delta_shift_all(build_r(s), hs, ctx(2));
      for (std::size_t j = 0; j < hs.size(); ++j) {
        const auto expect = combinatorial_shift(hs[j], s);
        CHECK(gamma[j] == expect);
        CHECK(viar[j] == expect);
        CHECK(viar2[j] == expect);
        ++cases;
      }
    }
  }
  MESSAGE(cases << " cases");
}

TEST_CASE("shifted iff fixed by every simple reflection") {
  std::size_t cases = 0;
  auto check = [&](const UniformHypergraph& h) {
    bool fixed = true;
    for (unsigned i = 1; i < h.n(); ++i) fixed = fixed && combinatorial_shift(h, Permutation::simple(h.n(), i)) == h;
    CHECK(fixed == is_shifted(h));
    ++cases;
  };
  for (unsigned n = 2; n <= 5; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      for (const auto& h : all_hypergraphs(n, k, binomial(n, k) > 6 ? 5 : 10)) check(h);
    }
  }
  CHECK(cases >= 1000);
}

TEST_CASE("lex monotonicity along weak-order covers (exhaustive, n = 4)") {
  const auto hs = everything_on_4();
  for (auto p : {0UL, 2UL}) {
    std::map<std::vector<unsigned>, std::vector<RankProfile>> prof;
    std::map<std::vector<unsigned>, std::vector<UniformHypergraph>> shifts;
    for (const auto& w : all_permutations(4)) {
      prof[w.images()] = shift_profiles(build_r(w), hs, ctx(p));
      shifts[w.images()] = delta_shift_all(build_r(w), hs, ctx(p));
    }
    std::size_t covers = 0;
    for (const auto& w : all_permutations(4)) {
      for (unsigned i = 1; i < 4; ++i) {
        const auto ws = w * Permutation::simple(4, i);
        if (ws.length() <= w.length()) continue;
        for (std::size_t j = 0; j < hs.size(); ++j) {
          // rank sequences grow, shifts shrink
          CHECK(prof[w.images()][j].ranks <= prof[ws.images()][j].ranks);
          CHECK(!hypergraph_lex_less(shifts[w.images()][j], shifts[ws.images()][j]));
          ++covers;
        }
      }
    }
    // 36 covers in the weak order of S_4
    CHECK(covers == 36 * hs.size());

    // full shift is the lex-smallest partial shift
    const auto& full = shifts[Permutation::longest(4).images()];
    for (std::size_t j = 0; j < hs.size(); ++j) {
      CHECK(is_shifted(full[j]));
      for (const auto& [w, sh] : shifts) CHECK(!hypergraph_lex_less(sh[j], full[j]));
    }
  }
}

TEST_CASE("lex monotonicity along reduced-word chains, random n = 5, 6") {
  std::mt19937_64 rng(74);
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 5 + rng() % 2;
    const unsigned k = 1 + rng() % (n - 1);
    const auto s = random_hypergraph(n, k, 5, rng);
    // a random maximal chain e < s_i1 < s_i1 s_i2 < ... < w0
    auto w = Permutation::identity(n);
    auto prev = s;
    for (;;) {
      std::vector<unsigned> ups;
      for (unsigned i = 1; i < n; ++i) {
        if ((w * Permutation::simple(n, i)).length() > w.length()) ups.push_back(i);
      }
      if (ups.empty()) break;
      w = w * Permutation::simple(n, ups[rng() % ups.size()]);
      if (rng() % 4 != 0 && w != Permutation::longest(n)) continue;  // sample a few points of the chain
      const auto cur = partial_shift(s, w, ctx(0, t));
      CHECK(!hypergraph_lex_less(prev, cur));
      prev = cur;
    }
    CHECK(prev == full_shift(s, ctx(0, t)));
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("partial shift graphs with n <= 5 are acyclic and their sinks are shifted") {
  std::size_t graphs = 0, nodes = 0;
  auto run = [&](unsigned n, unsigned k, std::size_t m, std::uint64_t p) {
    auto g = build_psg(n, k, m, ctx(p));
    CHECK(certify_acyclic(g));
    const auto sk = sinks(g);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      CHECK(std::binary_search(sk.begin(), sk.end(), i) == is_shifted(g.nodes[i]));
    }
    CHECK(check_acyclic(contract(g, ctx(p))).acyclic);
    ++graphs;
    nodes += g.nodes.size();
  };
  for (unsigned n = 2; n <= 4; ++n) {
    for (unsigned k = 1; k < n; ++k) {
      for (std::size_t m = 1; m <= binomial(n, k); ++m) run(n, k, m, 0);
    }
  }
  for (std::size_t m = 1; m <= 5; ++m) run(5, 1, m, 0);
  for (std::size_t m = 1; m <= 5; ++m) run(5, 2, m, 0);
  for (std::size_t m = 1; m <= 3; ++m) run(5, 2, m, 2);
  for (std::size_t m = 1; m <= 3; ++m) run(5, 3, m, 0);
  MESSAGE(graphs << " graphs, " << nodes << " nodes");
  CHECK(nodes >= 1000);
}

TEST_CASE("matroid stability for additive pairs") {
  std::mt19937_64 rng(75);
  const PolyRing ring(0);
  std::size_t cases = 0;
  // every additive pair in S_4 against every 2-uniform hypergraph with <= 3 edges
  const auto hs = all_hypergraphs(4, 2, 3);
  for (const auto& v : all_permutations(4)) {
    for (const auto& w : all_permutations(4)) {
      if ((v * w).length() != v.length() + w.length()) continue;
      const auto direct = shift_profiles(build_r(v * w), hs, ctx(0));
      const auto twisted = shift_profiles(multiply(build_r(v), twist(build_r(w), v, ring), ring), hs, ctx(0));
      for (std::size_t j = 0; j < hs.size(); ++j) CHECK(direct[j].pivots == twisted[j].pivots);
      cases += hs.size();
    }
  }
  // random additive pairs in S_5
  int pairs = 0;
  while (pairs < 150) {
    const auto v = random_perm(5, rng);
    const auto w = random_perm(5, rng);
    if ((v * w).length() != v.length() + w.length()) continue;
    ++pairs;
    std::vector<UniformHypergraph> batch;
    for (int j = 0; j < 8; ++j) batch.push_back(random_hypergraph(5, 1 + rng() % 4, 5, rng));
    const auto direct = shift_profiles(build_r(v * w), batch, ctx(0));
    const auto twisted = shift_profiles(multiply(build_r(v), twist(build_r(w), v, ring), ring), batch, ctx(0));
    for (std::size_t j = 0; j < batch.size(); ++j) CHECK(direct[j].pivots == twisted[j].pivots);
    cases += batch.size();
  }
  CHECK(cases >= 1000);
}

TEST_CASE("near cones: counting formula, f-vectors, Betti numbers, transpositions (n <= 6)") {
  std::mt19937_64 rng(76);
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 3 + rng() % 4;
    const auto k = random_complex(n, 6, 2 + rng() % 2, rng);
    const auto w = random_certified(n, rng);
    const std::uint64_t p = t % 3 == 0 ? 2 : 0;
    const auto shifted = shift_complex(k, w, ctx(p, t));
    CHECK(f_vector(shifted) == f_vector(k));
    REQUIRE(is_near_cone(shifted));
    const auto betti = betti_numbers(shifted, p);
    CHECK(betti == betti_numbers(k, p));
    CHECK(near_cone_betti(shifted, p) == betti);
    // every transposition keeps near cones near cones
    unsigned i = 1 + rng() % n, j = 1 + rng() % n;
    while (j == i) j = 1 + rng() % n;
    const auto g = combinatorial_shift(shifted, Permutation::transposition(n, std::min(i, j), std::max(i, j)));
    CHECK(is_near_cone(g));
    CHECK(f_vector(g) == f_vector(k));
    CHECK(near_cone_betti(g) == betti_numbers(g, 0));
    CHECK(combinatorial_shift(shifted, Permutation::transposition(n, 1, 2)) == shifted);
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("f-vectors survive every partial shift") {
  std::mt19937_64 rng(77);
  std::size_t cases = 0;
  for (int t = 0; t < 1000; ++t) {
    const unsigned n = 2 + rng() % 5;
    const auto k = random_complex(n, 5, 3, rng);
    const auto w = random_perm(n, rng);
    const auto shifted = shift_complex(k, w, ctx(t % 2 ? 0 : 2, t));
    CHECK(f_vector(shifted) == f_vector(k));
    ++cases;
  }
  CHECK(cases >= 1000);
}
