#include "shiftlab/bruhat.hpp"

namespace shiftlab {

GenericMatrix defect_sum(const Permutation& v, const Permutation& w, const PolyRing& ring) {
  const unsigned n = v.n();
  const Permutation vinv = v.inverse();
  const Permutation winv = w.inverse();
  const Permutation vwinv = (v * w).inverse();
  Matrix<MultiPoly> m(n, n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned k = 1; k <= n; ++k) {
      MultiPoly acc;
      for (unsigned j = 1; j <= n; ++j) {
        const unsigned jv = vinv(j);
        const unsigned kw = winv(k);
        if (!(i < jv && v.is_inversion(i, jv))) continue;
        if (!(j < kw && w.is_inversion(j, kw))) continue;
        acc = ring.add(acc, ring.mul(ring.variable(var(i, jv)), ring.variable(var(jv, vwinv(k)))));
      }
      m(i - 1, k - 1) = acc;
    }
  }
  return GenericMatrix(std::move(m));
}

GenericMatrix product_defect(const Permutation& v, const Permutation& w, const PolyRing& ring) {
  if (v.n() != w.n()) throw PreconditionError("product_defect: different degrees");
  if ((v * w).length() != v.length() + w.length()) {
    throw PreconditionError("product_defect: lengths are not additive, l(vw) != l(v) + l(w)");
  }
  const GenericMatrix lhs = multiply(build_r(v), twist(build_r(w), v, ring), ring);
  GenericMatrix defect = subtract(lhs, build_r(v * w), ring);
  if (!(defect == defect_sum(v, w, ring))) {
    throw InternalError("product defect disagrees with the explicit double sum");
  }
  return defect;
}

}  // namespace shiftlab
