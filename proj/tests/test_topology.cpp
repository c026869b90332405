#include <random>
#include <string>
#include <vector>

#include "doctest.h"

#include "shiftlab/error.hpp"
#include "shiftlab/topology.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using test::complex_from_string;

namespace {

FieldContext ctx(std::uint64_t p) { return make_field_context(p, Backend::Randomized, 1); }

BettiVector bv(std::vector<std::uint64_t> b) { return {0, std::move(b)}; }

Permutation w0_times(std::vector<unsigned> word) {
  return Permutation::longest(6) * Permutation::from_word(6, word);
}

struct Row {
  const char* label;
  std::vector<unsigned> word;  // w = w0 s_{word[0]} s_{word[1]} ...
  const char* facets;
  std::vector<std::uint64_t> betti;
};

const std::vector<Row>& table() {
  static const std::vector<Row> rows{
      {"A", {}, "123 124 125 126 134 135 136 145 146 156", {1, 0, 0}},
      {"B", {1}, "123 124 125 126 134 135 136 145 146 234 56", {1, 1, 1}},
      {"C", {4, 3, 2, 1}, "123 124 125 126 134 135 136 234 235 236 45 46 56", {1, 3, 3}},
      {"D", {4, 2, 3, 2, 1}, "123 124 125 126 134 135 145 234 235 245 36 46 56", {1, 3, 3}},
  };
  return rows;
}

long euler(const std::vector<std::uint64_t>& v) {
  long e = 0;
  for (std::size_t i = 0; i < v.size(); ++i) e += (i % 2 ? -1 : 1) * static_cast<long>(v[i]);
  return e;
}

}  // namespace

TEST_CASE("Betti numbers of RP2 depend on the field") {
  const auto rp = test::rp26();
  CHECK(betti_numbers(rp, 0) == bv({1, 0, 0}));
  CHECK(betti_numbers(rp, 2) == bv({1, 1, 1}));
  CHECK(betti_numbers(rp, 3) == bv({1, 0, 0}));
  CHECK(betti_numbers(rp, 2).to_string() == "(1,1,1)");
}

TEST_CASE("Betti numbers of small spaces") {
  CHECK(betti_numbers(complex_from_string(4, "123 124 134 234"), 0) == bv({1, 0, 1}));
  CHECK(betti_numbers(complex_from_string(3, "12 13 23"), 0) == bv({1, 1}));
  CHECK(betti_numbers(complex_from_string(3, "1 2 3"), 0) == bv({3}));
  CHECK(betti_numbers(complex_from_string(1, "1"), 2) == bv({1}));
  // 7-vertex torus
  const auto torus = complex_from_string(7, "124 235 346 457 156 267 137 134 245 356 467 157 126 237");
  CHECK(f_vector(torus) == FVector{1, 7, 21, 14});
  for (unsigned p : {0U, 2U, 3U}) CHECK(betti_numbers(torus, p) == bv({1, 2, 1}));
  CHECK(boundary_rank(complex_from_string(3, "123"), 2, 0) == 1);
  CHECK(boundary_rank(complex_from_string(3, "123"), 1, 0) == 2);
  CHECK(boundary_rank(complex_from_string(3, "123"), 0, 0) == 0);
}

TEST_CASE("Euler characteristic agrees with the f-vector") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto k = random_complex(2 + rng() % 6, 6, 3, rng);
    const auto f = f_vector(k);
    // f[0] counts the empty face
    const std::vector<std::uint64_t> faces(f.begin() + 1, f.end());
    for (unsigned p : {0U, 2U}) CHECK(euler(betti_numbers(k, p).betti) == euler(faces));
  }
}

TEST_CASE("layer-wise shifts of RP2 reproduce the table") {
  const auto rp = test::rp26();
  for (const auto& row : table()) {
    CAPTURE(row.label);
    const auto shifted = shift_complex(rp, w0_times(row.word), ctx(0));
    CHECK(shifted == complex_from_string(6, row.facets));
    CHECK(f_vector(shifted) == f_vector(rp));
    for (unsigned p : {0U, 2U, 3U}) CHECK(betti_numbers(shifted, p) == bv(row.betti));
  }
  CHECK(shift_complex(rp, Permutation::longest(6), ctx(2)) == complex_from_string(6, table()[1].facets));
}

TEST_CASE("near cone formula") {
  const auto b = complex_from_string(6, table()[1].facets);
  REQUIRE(is_near_cone(b));
  CHECK(near_cone_betti(b) == bv({1, 1, 1}));
  const auto cone = complex_from_string(5, "123 145 134");
  CHECK(near_cone_betti(cone) == bv({1, 0, 0}));
  CHECK(near_cone_betti(cone) == betti_numbers(cone, 0));
  CHECK_THROWS_AS(near_cone_betti(test::rp26()), PreconditionError);
}

TEST_CASE("Betti numbers through the full shift") {
  CHECK(betti_via_full_shift(complex_from_string(1, "1"), ctx(0)) == bv({1}));
  CHECK(betti_via_full_shift(test::rp26(), ctx(0)) == bv({1, 0, 0}));
  CHECK(betti_via_full_shift(test::rp26(), ctx(2)) == bv({1, 1, 1}));
  std::mt19937_64 rng(42);
  for (int t = 0; t < 100; ++t) {
    const auto k = random_complex(2 + rng() % 5, 5, 2, rng);
    CHECK(betti_via_full_shift(k, ctx(0)) == betti_numbers(k, 0));
    CHECK(betti_via_full_shift(k, ctx(2)) == betti_numbers(k, 2));
  }
}

TEST_CASE("weak-order certificate") {
  CHECK(preserves_betti_cert(Permutation::longest(6), 6));
  CHECK(preserves_betti_cert(Permutation::cycle(6), 6));
  CHECK(!preserves_betti_cert(Permutation::identity(6), 6));
  std::size_t count = 0;
  for (const auto& w : all_permutations(6)) count += preserves_betti_cert(w, 6) ? 1 : 0;
  CHECK(count == 120);
  CHECK_THROWS_AS(preserves_betti_cert(Permutation::identity(5), 6), PreconditionError);
}

TEST_CASE("the 6-cycle over GF(2) gives a near cone that is not shifted") {
  const auto t = shift_complex(test::rp26(), Permutation::cycle(6), ctx(2));
  CHECK(t == complex_from_string(6, "123 124 125 126 134 135 136 146 156 236 45"));
  CHECK(betti_numbers(t, 2) == bv({1, 1, 1}));
  CHECK(near_cone_betti(t, 2) == bv({1, 1, 1}));
  CHECK(is_near_cone(t));
  CHECK(!is_shifted(t));
}

TEST_CASE("combinatorial shifts of complexes") {
  const auto k = complex_from_string(4, "23 34");
  const auto g = combinatorial_shift(k, Permutation::simple(4, 1));
  CHECK(g == complex_from_string(4, "13 34"));
  CHECK(f_vector(g) == f_vector(k));
}

TEST_CASE("random complexes stay in range") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto k = random_complex(6, 6, 2, rng);
    CHECK(k.n() == 6);
    CHECK(k.dimension() <= 2);
    CHECK(k.facets().size() <= 6);
  }
  CHECK_THROWS_AS(random_complex(0, 3, 2, rng), PreconditionError);
}

TEST_CASE("monotonicity scan over RP2 and a shifted complex") {
  const std::vector<ComplexInstance> cs{{"rp26", test::rp26()},
                                        {"shifted", complex_from_string(5, "123 124 125 134 23")}};
  const auto r = conjecture_scan(cs, {GraphInstance{"psg425", 4, 2, 5, std::nullopt}}, ctx(0));
  CHECK(r.monotonicity_violations.empty());
  REQUIRE(r.complexes.size() == 2);
  const auto& rp = r.complexes[0];
  CHECK(rp.shifts == 720);
  CHECK(rp.certified == 120);
  CHECK(rp.certified_preserving == 120);
  // the certified ones and the identity
  REQUIRE(rp.preserving.size() == 121);
  CHECK(rp.preserving.front() == Permutation::identity(6));
  for (std::size_t i = 1; i < rp.preserving.size(); ++i) CHECK(preserves_betti_cert(rp.preserving[i], 6));
  CHECK(r.complexes[1].preserving.size() == 120);
  REQUIRE(r.graphs.size() == 1);
  CHECK(r.graphs[0].acyclic);
  CHECK(r.graphs[0].nodes == 1);  // contracted: everything shifts to one node
  CHECK(r.acyclicity_violations == 0);
  const auto json = scan_report_json(r);
  CHECK(json.find("\"monotonicity_violations\"") != std::string::npos);
}

TEST_CASE("scan_contracted reports cycles") {
  ScanReport r;
  ContractedShiftGraph g;
  g.nodes = {test::hypergraph_from_string(4, "12"), test::hypergraph_from_string(4, "13")};
  g.edges = {{0, 1}, {1, 0}};
  scan_contracted(r, "synthetic", g);
  REQUIRE(r.graphs.size() == 1);
  CHECK(!r.graphs[0].acyclic);
  CHECK(r.graphs[0].cycle.size() >= 2);
  CHECK(r.acyclicity_violations == 1);
}
