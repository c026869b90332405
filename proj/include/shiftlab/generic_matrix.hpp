#pragma once

// Structured polynomial matrices: X (all variables), U (unipotent upper
// triangle), U(w), r(w) = U(w) w, gamma(t), and the Vandermonde matrix.

#include <cstdint>

#include "shiftlab/matrix.hpp"
#include "shiftlab/multipoly.hpp"
#include "shiftlab/permutation.hpp"

namespace shiftlab {

class GenericMatrix {
 public:
  GenericMatrix() = default;
  explicit GenericMatrix(Matrix<MultiPoly> entries);  // must be square

  unsigned n() const { return static_cast<unsigned>(m_.rows()); }
  const Matrix<MultiPoly>& entries() const { return m_; }
  const MultiPoly& operator()(unsigned i, unsigned j) const { return m_(i - 1, j - 1); }  // 1-based

  // Maximal total degree of an entry (recomputed from the entries).
  unsigned degree_bound() const;
  std::vector<Var> variables() const;
  // Structural hash; equal matrices hash equally.
  std::uint64_t hash() const;

  friend bool operator==(const GenericMatrix& a, const GenericMatrix& b) { return a.m_ == b.m_; }
  std::string to_string() const;

 private:
  Matrix<MultiPoly> m_;
};

GenericMatrix permutation_matrix(const Permutation& w);
GenericMatrix build_X(unsigned n);
GenericMatrix build_U(unsigned n);
GenericMatrix build_Uw(const Permutation& w);
GenericMatrix build_r(const Permutation& w);
// gamma((i j)): identity except x_ij at (i,i), 1 at (i,j) and (j,i), 0 at (j,j).
// Not generic in its Bruhat cell unless j = i + 1.
GenericMatrix build_gamma(const Permutation& t);
// Entry (i, j) = x_j^i.
GenericMatrix build_vandermonde(unsigned n);
GenericMatrix identity_generic(unsigned n);

// Relabels x_ij -> x_{i.v^{-1}, j.v^{-1}}.
GenericMatrix twist(const GenericMatrix& m, const Permutation& v, const PolyRing& ring);

GenericMatrix multiply(const GenericMatrix& a, const GenericMatrix& b, const PolyRing& ring);
GenericMatrix subtract(const GenericMatrix& a, const GenericMatrix& b, const PolyRing& ring);

}  // namespace shiftlab
