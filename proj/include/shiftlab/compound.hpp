#pragma once

// Rows of the k-th compound matrix g^{^k}: entry (rho, tau) = det g[rho, tau].
//
// A row rho = {r_1 < ... < r_k} is built by expanding along its rows one at a
// time: with D_t(T) the minor on rows r_1..r_t and the t-set of columns T,
//   D_t(T) = sum_q (-1)^(t+q) g[r_t][c_q] D_{t-1}(T \ c_q),  T = {c_1 < ... < c_t},
// so a row costs O(2^n * n) ring operations instead of C(n,k) determinants.

#include <algorithm>
#include <map>
#include <vector>

#include "shiftlab/combstruct.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/matrix.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab {

template <class D>
std::vector<typename D::Elem> compound_row(const D& dom, const Matrix<typename D::Elem>& g, Subset rho,
                                           const std::vector<Subset>& columns) {
  using Elem = typename D::Elem;
  const unsigned n = static_cast<unsigned>(g.rows());
  const auto rows = elements(rho);
  std::vector<Elem> out;
  out.reserve(columns.size());
  if (n <= 12) {
    // Dense table over all column sets; level t only touches t-subsets.
    std::vector<Elem> table(std::size_t{1} << n, dom.zero());
    std::vector<Subset> level{0};
    table[0] = dom.one();
    for (unsigned t = 1; t <= rows.size(); ++t) {
      const unsigned r = rows[t - 1] - 1;
      std::vector<Subset> next;
      for (Subset prev : level) {
        const Elem val = table[prev];
        if (dom.is_zero(val)) continue;
        for (unsigned c = 0; c < n; ++c) {
          if ((prev >> c) & 1U) continue;
          if (dom.is_zero(g(r, c))) continue;
          const Subset t_set = prev | (Subset{1} << c);
          // q = 1 + #{elements of prev below c}; sign (-1)^(t+q).
          const unsigned q = 1 + subset_size(prev & ((Subset{1} << c) - 1));
          const Elem term = dom.mul(g(r, c), val);
          if (dom.is_zero(table[t_set])) next.push_back(t_set);
          table[t_set] = ((t + q) % 2 == 0) ? dom.add(table[t_set], term) : dom.sub(table[t_set], term);
        }
      }
      for (Subset prev : level) table[prev] = dom.zero();
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      level.swap(next);
    }
    for (Subset tau : columns) out.push_back(table[tau]);
    return out;
  }
  std::map<Subset, Elem> level{{0, dom.one()}};
  for (unsigned t = 1; t <= rows.size(); ++t) {
    const unsigned r = rows[t - 1] - 1;
    std::map<Subset, Elem> next;
    for (const auto& [prev, val] : level) {
      if (dom.is_zero(val)) continue;
      for (unsigned c = 0; c < n; ++c) {
        if ((prev >> c) & 1U) continue;
        if (dom.is_zero(g(r, c))) continue;
        const Subset t_set = prev | (Subset{1} << c);
        const unsigned q = 1 + subset_size(prev & ((Subset{1} << c) - 1));
        const Elem term = dom.mul(g(r, c), val);
        auto it = next.try_emplace(t_set, dom.zero()).first;
        it->second = ((t + q) % 2 == 0) ? dom.add(it->second, term) : dom.sub(it->second, term);
      }
    }
    level.swap(next);
  }
  for (Subset tau : columns) {
    auto it = level.find(tau);
    out.push_back(it == level.end() ? dom.zero() : it->second);
  }
  return out;
}

// g^{^S}: rows indexed by the edges of S (lex order), columns by all
// k-subsets of [n] in lex order.
template <class D>
Matrix<typename D::Elem> compound_rows(const D& dom, const Matrix<typename D::Elem>& g, const UniformHypergraph& s) {
  if (g.rows() != g.cols() || g.rows() != s.n()) throw PreconditionError("compound_rows: size mismatch");
  const auto columns = all_subsets(s.n(), s.k());
  Matrix<typename D::Elem> out(s.size(), columns.size(), dom.zero());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto row = compound_row(dom, g, s.edges()[i], columns);
    for (std::size_t j = 0; j < columns.size(); ++j) out(i, j) = std::move(row[j]);
  }
  return out;
}

// The full compound matrix g^{^k}.
template <class D>
Matrix<typename D::Elem> compound_matrix(const D& dom, const Matrix<typename D::Elem>& g, unsigned k) {
  const unsigned n = static_cast<unsigned>(g.rows());
  return compound_rows(dom, g, UniformHypergraph(n, k, all_subsets(n, k)));
}

}  // namespace shiftlab
