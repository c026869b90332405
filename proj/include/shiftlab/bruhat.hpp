#pragma once

// Bruhat cells of concrete matrices, normal forms in U(w) w B, and the
// product defect r(v) r(w)^v - r(vw).

#include <vector>

#include "shiftlab/error.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/matrix.hpp"
#include "shiftlab/permutation.hpp"
#include "shiftlab/rank_profile.hpp"

namespace shiftlab {

template <class F>
Matrix<typename F::Elem> concrete_permutation_matrix(const F& field, const Permutation& w) {
  Matrix<typename F::Elem> m(w.n(), w.n(), field.zero());
  for (unsigned i = 1; i <= w.n(); ++i) m(i - 1, w(i) - 1) = field.one();
  return m;
}

// The w with g in BwB. rank g[i..n, 1..j] = #{a >= i : a.w <= j}, so a.w is
// the first column where adding row a raises the southwest rank.
template <class F>
Permutation bruhat_cell(const F& field, const Matrix<typename F::Elem>& g) {
  const unsigned n = static_cast<unsigned>(g.rows());
  if (g.cols() != n) throw PreconditionError("bruhat_cell: matrix is not square");
  // sw[a][j] = rank of rows a..n (1-based a), first j columns; sw[n+1][*] = 0.
  std::vector<std::vector<std::size_t>> sw(n + 2, std::vector<std::size_t>(n + 1, 0));
  for (unsigned a = n; a >= 1; --a) {
    Matrix<typename F::Elem> rows(n - a + 1, n);
    for (unsigned i = a; i <= n; ++i) {
      for (unsigned j = 0; j < n; ++j) rows(i - a, j) = g(i - 1, j);
    }
    sw[a] = rank_profile(field, rows).ranks;
  }
  if (sw[1][n] != n) throw PreconditionError("bruhat_cell: matrix not invertible");
  std::vector<unsigned> images(n);
  for (unsigned a = 1; a <= n; ++a) {
    unsigned j = 1;
    while (j <= n && sw[a][j] - sw[a + 1][j] != 1) ++j;
    if (j > n) throw InternalError("bruhat_cell: inconsistent rank profile");
    images[a - 1] = j;
  }
  return Permutation(images);
}

template <class F>
struct CosetNormalForm {
  Matrix<typename F::Elem> u_prime;        // in U(w)
  Matrix<typename F::Elem> u_double_prime;  // unipotent upper triangular
};

// Writes u w = u' w u'' with u' supported on the diagonal and inv(w).
// Each entry (k, l) of u outside inv(w) is cleared by the column operation
// u <- u e_kl(-gamma), and e_kl(gamma) w = w e_{k.w, l.w}(gamma) is upper
// triangular because k.w < l.w. Within a column, rows are cleared bottom-up
// so that later operations never touch cleared entries.
template <class F>
CosetNormalForm<F> coset_normalize(const F& field, const Matrix<typename F::Elem>& u, const Permutation& w) {
  const unsigned n = w.n();
  if (u.rows() != n || u.cols() != n) throw PreconditionError("coset_normalize: size mismatch");
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j <= i; ++j) {
      const bool ok = i == j ? field.equal(u(i, j), field.one()) : field.is_zero(u(i, j));
      if (!ok) throw PreconditionError("coset_normalize: matrix is not unipotent upper triangular");
    }
  }
  CosetNormalForm<F> out{u, identity_matrix(field, n)};
  struct Step {
    unsigned k, l;
    typename F::Elem gamma;
  };
  std::vector<Step> steps;
  auto& up = out.u_prime;
  for (unsigned l = 1; l <= n; ++l) {
    for (unsigned k = l - 1; k >= 1; --k) {
      if (w.is_inversion(k, l)) continue;
      const auto gamma = up(k - 1, l - 1);  // u_kk = 1
      if (!field.is_zero(gamma)) {
        for (unsigned i = 1; i <= k; ++i) {
          up(i - 1, l - 1) = field.sub(up(i - 1, l - 1), field.mul(gamma, up(i - 1, k - 1)));
        }
        steps.push_back({k, l, gamma});
      }
    }
  }
  // u'' = prod_{s = r..1} e_{k_s.w, l_s.w}(gamma_s)
  auto& upp = out.u_double_prime;
  for (std::size_t s = steps.size(); s-- > 0;) {
    const unsigned a = w(steps[s].k);
    const unsigned b = w(steps[s].l);
    // upp <- upp e_ab(gamma): column b += gamma * column a.
    for (unsigned i = 1; i <= n; ++i) {
      upp(i - 1, b - 1) = field.add(upp(i - 1, b - 1), field.mul(steps[s].gamma, upp(i - 1, a - 1)));
    }
  }
  return out;
}

// r(v) r(w)^v - r(vw), requiring l(vw) = l(v) + l(w). Throws InternalError
// if the result differs from the explicit double sum (see defect_sum).
GenericMatrix product_defect(const Permutation& v, const Permutation& w, const PolyRing& ring);

// Entry (i, k): sum over j with (i, j.v^{-1}) in inv v and (j, k.w^{-1}) in inv w
// of x_{i, j.v^{-1}} x_{j.v^{-1}, k.(vw)^{-1}}.
GenericMatrix defect_sum(const Permutation& v, const Permutation& w, const PolyRing& ring);

}  // namespace shiftlab
