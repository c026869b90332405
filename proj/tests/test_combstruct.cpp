#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "shiftlab/combstruct.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"
#include "test_support.hpp"

using namespace shiftlab;
using test::all_hypergraphs;
using test::sub;

namespace {

// sorted-element tuples compared lexicographically: the textbook order
bool tuple_less(Subset a, Subset b) { return elements(a) < elements(b); }

bool dominates_brute(Subset a, Subset b) {
  const auto x = elements(a), y = elements(b);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] > y[i]) return false;
  }
  return true;
}

bool shifted_brute(const UniformHypergraph& s) {
  for (auto sigma : s.edges()) {
    for (auto rho : all_subsets(s.n(), s.k())) {
      if (dominates_brute(rho, sigma) && !s.contains(rho)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("lex order on 2-subsets of [4]") {
  const std::vector<Subset> expect{sub("12"), sub("13"), sub("14"), sub("23"), sub("24"), sub("34")};
  CHECK(all_subsets(4, 2) == expect);
  for (std::size_t i = 0; i + 1 < expect.size(); ++i) {
    CHECK(lex_less(expect[i], expect[i + 1]));
    CHECK(lex_compare(expect[i], expect[i + 1], 4) == -1);
  }
  CHECK(lex_compare(sub("13"), sub("13"), 4) == 0);
  CHECK_THROWS_AS(lex_compare(sub("13"), sub("123"), 4), PreconditionError);
  CHECK_THROWS_AS(lex_compare(sub("15"), sub("12"), 4), PreconditionError);
}

TEST_CASE("lex order, ranks and domination exhaustively for n <= 6") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (unsigned k = 0; k <= n; ++k) {
      auto subsets = all_subsets(n, k);
      CHECK(subsets.size() == binomial(n, k));
      auto sorted = subsets;
      std::sort(sorted.begin(), sorted.end(), tuple_less);
      CHECK(sorted == subsets);
      for (std::size_t i = 0; i < subsets.size(); ++i) {
        CHECK(lex_rank(subsets[i], n) == i);
        CHECK(lex_unrank(i, n, k) == subsets[i]);
      }
      for (auto a : subsets) {
        for (auto b : subsets) {
          CHECK(lex_less(a, b) == tuple_less(a, b));
          CHECK(dominates(a, b) == dominates_brute(a, b));
          if (dominates(a, b)) CHECK(!lex_less(b, a));
          if (dominates(a, b) && dominates(b, a)) CHECK(a == b);
        }
      }
    }
  }
}

TEST_CASE("domination examples") {
  CHECK(dominates(sub("13"), sub("24")));
  CHECK(!dominates(sub("14"), sub("23")));
  CHECK(!dominates(sub("23"), sub("14")));
  CHECK_THROWS_AS(dominates(sub("1"), sub("12")), PreconditionError);
}

TEST_CASE("hypergraph construction") {
  const UniformHypergraph h(4, 2, {sub("23"), sub("12")});
  CHECK(h.edges() == std::vector<Subset>{sub("12"), sub("23")});
  CHECK_THROWS_AS(UniformHypergraph(4, 2, {sub("12"), sub("12")}), PreconditionError);
  CHECK_THROWS_AS(UniformHypergraph(4, 2, {sub("123")}), PreconditionError);
  CHECK_THROWS_AS(UniformHypergraph(3, 2, {sub("14")}), PreconditionError);
  CHECK(UniformHypergraph(4, 2, {}).empty());
}

TEST_CASE("hypergraph lex order equals lex order of the sorted edge indices") {
  const auto hs = all_hypergraphs(4, 2, 6);
  std::vector<std::vector<std::uint64_t>> idx;
  for (const auto& h : hs) {
    std::vector<std::uint64_t> r;
    for (auto e : h.edges()) r.push_back(lex_rank(e, 4));
    idx.push_back(r);
  }
  for (std::size_t a = 0; a < hs.size(); ++a) {
    for (std::size_t b = 0; b < hs.size(); ++b) {
      if (hs[a].size() != hs[b].size()) continue;
      CHECK(hypergraph_lex_less(hs[a], hs[b]) == (idx[a] < idx[b]));
    }
  }
}

TEST_CASE("shiftedness") {
  CHECK(is_shifted(UniformHypergraph(4, 2, {sub("12"), sub("13")})));
  CHECK(!is_shifted(UniformHypergraph(4, 2, {sub("12"), sub("23")})));
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned k = 1; k <= n; ++k) {
      if (binomial(n, k) > 10) {
        // n = 5, k = 2 or 3: only up to 4 edges
        for (const auto& h : all_hypergraphs(n, k, 4)) CHECK(is_shifted(h) == shifted_brute(h));
      } else {
        for (const auto& h : all_hypergraphs(n, k, 10)) CHECK(is_shifted(h) == shifted_brute(h));
      }
    }
  }
}

TEST_CASE("complexes: layers, closure and f-vectors") {
  const auto rp = test::rp26();
  CHECK(f_vector(rp) == FVector{1, 6, 15, 10});
  CHECK(rp.dimension() == 2);
  CHECK(rp.layer(2).size() == 10);
  CHECK(rp.layer(2) == test::rp26_triangles());
  CHECK(rp.layer(3).empty());
  std::size_t total = 0;
  for (int s = 0; s <= rp.dimension(); ++s) total += rp.layer(s).size();
  CHECK(total == rp.face_count() - 1);
  CHECK(!is_near_cone(rp));
  CHECK(!is_shifted(rp));

  std::vector<UniformHypergraph> layers;
  for (int s = 0; s <= rp.dimension(); ++s) layers.push_back(rp.layer(s));
  CHECK(complex_from_layers(6, layers) == rp);

  Subset witness = 0;
  const std::vector<UniformHypergraph> broken{UniformHypergraph(3, 1, {sub("1"), sub("2"), sub("3")}),
                                               UniformHypergraph(3, 2, {sub("12")}),
                                               UniformHypergraph(3, 3, {sub("123")})};
  CHECK_THROWS_AS(complex_from_layers(3, broken), PreconditionError);
  CHECK(!try_complex_from_layers(3, broken, &witness));
  CHECK(witness == sub("123"));

  CHECK(SimplicialComplex::from_faces(4, {}).empty());
  const auto single = SimplicialComplex::from_faces(1, {sub("1")});
  CHECK(f_vector(single) == FVector{1, 1});
}

TEST_CASE("random complexes round-trip through their layers") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const unsigned n = 2 + rng() % 5;
    std::vector<Subset> faces;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      const Subset f = rng() & full_set(n);
      if (f) faces.push_back(f);
    }
    const auto k = SimplicialComplex::from_faces(n, faces);
    if (k.empty()) continue;
    std::vector<UniformHypergraph> layers;
    for (int s = 0; s <= k.dimension(); ++s) layers.push_back(k.layer(s));
    CHECK(complex_from_layers(n, layers) == k);
    for (auto f : faces) CHECK(k.contains(f));
    const auto fv = f_vector(k);
    CHECK(fv[0] == 1);
  }
}

TEST_CASE("near cones") {
  // a shifted complex is a near cone
  const auto shifted = SimplicialComplex::from_faces(5, {sub("123"), sub("124"), sub("125"), sub("134"), sub("23")});
  CHECK(is_shifted(shifted));
  CHECK(is_near_cone(shifted));
  const auto c6 = test::complex_from_string(6, "123 124 125 126 134 135 136 146 156 236 45");
  CHECK(is_near_cone(c6));
  CHECK(!is_shifted(c6));
}

TEST_CASE("subset helpers") {
  CHECK(subset_to_string(sub("135"), 6) == "135");
  CHECK(subset_to_string(subset_of({1, 10, 12}), 12) == "{1,10,12}");
  CHECK(elements(sub("246")) == std::vector<unsigned>{2, 4, 6});
  CHECK(min_element(sub("46")) == 4);
}
