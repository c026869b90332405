#pragma once

// Column rank profiles by Gaussian elimination.
//
// Over a field the elimination is the usual one with row operations done by
// the domain's submul kernel. Over an integral domain (Z, polynomial rings)
// it is fraction-free (Bareiss): every intermediate entry is a minor of the
// input, and the division by the previous pivot is exact.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

#include "shiftlab/error.hpp"
#include "shiftlab/matrix.hpp"

namespace shiftlab {

struct RankProfile {
  // ranks[j] = rank of the first j columns (in the requested order); ranks[0] = 0.
  std::vector<std::size_t> ranks;
  // Original indices of the columns where the rank steps up, increasing in the order.
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return ranks.empty() ? 0 : ranks.back(); }
};

namespace detail {

template <class D>
Matrix<typename D::Elem> permute_columns(const Matrix<typename D::Elem>& m,
                                         std::span<const std::size_t> order) {
  Matrix<typename D::Elem> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, order[j]);
  }
  return out;
}

template <class D>
void field_echelon(const D& dom, Matrix<typename D::Elem>& a, RankProfile& rp, std::size_t stop) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t cur = 0;
  for (std::size_t j = 0; j < cols; ++j) {
    if (cur < rows && cur < stop) {
      std::size_t piv = cur;
      while (piv < rows && dom.is_zero(a(piv, j))) ++piv;
      if (piv < rows) {
        a.swap_rows(piv, cur);
        const auto inv = dom.inv(a(cur, j));
        auto src = a.row(cur).subspan(j);
        for (std::size_t i = cur + 1; i < rows; ++i) {
          if (dom.is_zero(a(i, j))) continue;
          const auto c = dom.mul(a(i, j), inv);
          dom.submul(a.row(i).subspan(j), c, std::span<const typename D::Elem>(src));
        }
        rp.pivots.push_back(j);
        ++cur;
      }
    }
    rp.ranks[j + 1] = cur;
  }
}

template <class D>
void bareiss_echelon(const D& dom, Matrix<typename D::Elem>& a, RankProfile& rp, std::size_t stop) {
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t cur = 0;
  auto prev = dom.one();
  for (std::size_t j = 0; j < cols; ++j) {
    if (cur < rows && cur < stop) {
      std::size_t piv = cur;
      while (piv < rows && dom.is_zero(a(piv, j))) ++piv;
      if (piv < rows) {
        a.swap_rows(piv, cur);
        const auto p = a(cur, j);
        const bool last = cur + 1 == stop;
        if (!last) {
          for (std::size_t i = cur + 1; i < rows; ++i) {
            const auto lead = a(i, j);
            for (std::size_t c = j + 1; c < cols; ++c) {
              auto v = dom.mul(p, a(i, c));
              if (!dom.is_zero(lead) && !dom.is_zero(a(cur, c))) v = dom.sub(v, dom.mul(lead, a(cur, c)));
              a(i, c) = dom.divexact(v, prev);
            }
            a(i, j) = dom.zero();
          }
        }
        prev = p;
        rp.pivots.push_back(j);
        ++cur;
      }
    }
    rp.ranks[j + 1] = cur;
  }
}

}  // namespace detail

// Rank profile of m with columns visited in `order` (identity when empty).
// Elimination stops once `stop` pivots are found; later ranks stay constant.
template <class D>
RankProfile rank_profile(const D& dom, Matrix<typename D::Elem> m,
                         std::span<const std::size_t> order = {},
                         std::size_t stop = std::numeric_limits<std::size_t>::max()) {
  std::vector<std::size_t> natural;
  if (order.empty()) {
    natural.resize(m.cols());
    std::iota(natural.begin(), natural.end(), std::size_t{0});
    order = natural;
  } else {
    if (order.size() != m.cols()) throw PreconditionError("rank_profile: order has wrong length");
    std::vector<bool> seen(m.cols(), false);
    for (auto c : order) {
      if (c >= m.cols() || seen[c]) throw PreconditionError("rank_profile: order is not a permutation");
      seen[c] = true;
    }
    m = detail::permute_columns<D>(m, order);
  }
  RankProfile rp;
  rp.ranks.assign(m.cols() + 1, 0);
  if constexpr (D::is_field) {
    detail::field_echelon(dom, m, rp, stop);
  } else {
    detail::bareiss_echelon(dom, m, rp, stop);
  }
  for (auto& p : rp.pivots) p = order[p];
  return rp;
}

template <class D>
std::size_t rank(const D& dom, const Matrix<typename D::Elem>& m) {
  return rank_profile(dom, m).rank();
}

// Determinant of a square matrix.
template <class D>
typename D::Elem determinant(const D& dom, Matrix<typename D::Elem> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw PreconditionError("determinant: matrix is not square");
  if (n == 0) return dom.one();
  bool negate = false;
  auto prev = dom.one();
  auto result = dom.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && dom.is_zero(a(piv, k))) ++piv;
    if (piv == n) return dom.zero();
    if (piv != k) {
      a.swap_rows(piv, k);
      negate = !negate;
    }
    if constexpr (D::is_field) {
      result = dom.mul(result, a(k, k));
      const auto inv = dom.inv(a(k, k));
      for (std::size_t i = k + 1; i < n; ++i) {
        if (dom.is_zero(a(i, k))) continue;
        const auto c = dom.mul(a(i, k), inv);
        dom.submul(a.row(i).subspan(k), c, std::span<const typename D::Elem>(a.row(k).subspan(k)));
      }
    } else {
      for (std::size_t i = k + 1; i < n; ++i) {
        for (std::size_t c = k + 1; c < n; ++c) {
          a(i, c) = dom.divexact(dom.sub(dom.mul(a(k, k), a(i, c)), dom.mul(a(i, k), a(k, c))), prev);
        }
        a(i, k) = dom.zero();
      }
      prev = a(k, k);
      result = a(k, k);
    }
  }
  return negate ? dom.neg(result) : result;
}

}  // namespace shiftlab
