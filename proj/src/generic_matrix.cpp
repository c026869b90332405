#include "shiftlab/generic_matrix.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab {

namespace {

const PolyRing& integers() {
  static const PolyRing ring(0);
  return ring;
}

Matrix<MultiPoly> zeros(unsigned n) { return Matrix<MultiPoly>(n, n); }

}  // namespace

GenericMatrix::GenericMatrix(Matrix<MultiPoly> entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw PreconditionError("generic matrix must be square");
}

unsigned GenericMatrix::degree_bound() const {
  unsigned d = 0;
  for (unsigned i = 0; i < n(); ++i) {
    for (unsigned j = 0; j < n(); ++j) d = std::max(d, m_(i, j).degree());
  }
  return d;
}

std::vector<Var> GenericMatrix::variables() const {
  std::vector<std::uint16_t> keys;
  for (unsigned i = 0; i < n(); ++i) {
    for (unsigned j = 0; j < n(); ++j) {
      for (auto v : m_(i, j).variables()) keys.push_back(v.key());
    }
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Var> out;
  for (auto k : keys) out.push_back(Var::from_key(k));
  return out;
}

std::uint64_t GenericMatrix::hash() const {
  std::uint64_t h = mix64(n());
  for (unsigned i = 0; i < n(); ++i) {
    for (unsigned j = 0; j < n(); ++j) {
      h = hash_combine(h, 0xE0 + i * 131 + j);
      for (const auto& t : m_(i, j).terms()) {
        for (const auto& [k, e] : t.mono.factors()) h = hash_combine(h, (std::uint64_t{k} << 32U) | e);
        h = hash_combine(h, mpz_get_ui(t.coeff.get_mpz_t()) ^ (sgn(t.coeff) < 0 ? 0x5bd1e995ULL : 0));
      }
    }
  }
  return h;
}

std::string GenericMatrix::to_string() const {
  std::string s;
  for (unsigned i = 0; i < n(); ++i) {
    s += "[";
    for (unsigned j = 0; j < n(); ++j) {
      if (j > 0) s += ", ";
      s += m_(i, j).to_string();
    }
    s += "]\n";
  }
  return s;
}

GenericMatrix permutation_matrix(const Permutation& w) {
  auto m = zeros(w.n());
  for (unsigned i = 1; i <= w.n(); ++i) m(i - 1, w(i) - 1) = integers().one();
  return GenericMatrix(std::move(m));
}

GenericMatrix identity_generic(unsigned n) { return permutation_matrix(Permutation(n)); }

GenericMatrix build_X(unsigned n) {
  auto m = zeros(n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) m(i - 1, j - 1) = integers().variable(var(i, j));
  }
  return GenericMatrix(std::move(m));
}

GenericMatrix build_U(unsigned n) { return build_Uw(Permutation::longest(n)); }

GenericMatrix build_Uw(const Permutation& w) {
  auto m = zeros(w.n());
  for (unsigned i = 1; i <= w.n(); ++i) m(i - 1, i - 1) = integers().one();
  for (auto [i, j] : w.inversions()) m(i - 1, j - 1) = integers().variable(var(i, j));
  return GenericMatrix(std::move(m));
}

GenericMatrix build_r(const Permutation& w) {
  // (U(w) w)_{i, j.w} = U(w)_{ij}: 1 at (i, i.w), x_ij at (i, j.w) for (i,j) in inv w.
  auto m = zeros(w.n());
  for (unsigned i = 1; i <= w.n(); ++i) m(i - 1, w(i) - 1) = integers().one();
  for (auto [i, j] : w.inversions()) m(i - 1, w(j) - 1) = integers().variable(var(i, j));
  return GenericMatrix(std::move(m));
}

GenericMatrix build_gamma(const Permutation& t) {
  unsigned i = 0;
  unsigned j = 0;
  if (!t.is_transposition(&i, &j)) throw PreconditionError("gamma: permutation is not a transposition");
  auto m = identity_generic(t.n()).entries();
  m(i - 1, i - 1) = integers().variable(var(i, j));
  m(i - 1, j - 1) = integers().one();
  m(j - 1, i - 1) = integers().one();
  m(j - 1, j - 1) = MultiPoly{};
  return GenericMatrix(std::move(m));
}

GenericMatrix build_vandermonde(unsigned n) {
  auto m = zeros(n);
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = 1; j <= n; ++j) m(i - 1, j - 1) = integers().term(1, Monomial::of(var(j), i));
  }
  return GenericMatrix(std::move(m));
}

GenericMatrix twist(const GenericMatrix& m, const Permutation& v, const PolyRing& ring) {
  if (m.n() != v.n()) throw PreconditionError("twist: size mismatch");
  const Permutation vinv = v.inverse();
  auto relabel = [&](Var x) {
    if (x.row == 0 || x.row > v.n() || x.col > v.n()) {
      throw PreconditionError("twist: variable " + x.name() + " is not of the form x_ij with i, j <= n");
    }
    return var(vinv(x.row), vinv(x.col));
  };
  auto out = zeros(m.n());
  for (unsigned i = 0; i < m.n(); ++i) {
    for (unsigned j = 0; j < m.n(); ++j) out(i, j) = ring.rename(m.entries()(i, j), relabel);
  }
  return GenericMatrix(std::move(out));
}

GenericMatrix multiply(const GenericMatrix& a, const GenericMatrix& b, const PolyRing& ring) {
  return GenericMatrix(multiply(ring, a.entries(), b.entries()));
}

GenericMatrix subtract(const GenericMatrix& a, const GenericMatrix& b, const PolyRing& ring) {
  return GenericMatrix(subtract(ring, a.entries(), b.entries()));
}

}  // namespace shiftlab
