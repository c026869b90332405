#pragma once

// Concrete coefficient domains for the randomized backend and for homology.
//
// All domains share one duck-typed interface so that the elimination and
// compound-matrix templates can be written once:
//
//   using Elem;  static constexpr bool is_field;
//   zero() one() from_int(int64) from_mpz(mpz)
//   add sub neg mul is_zero equal
//   inv            (fields)      divexact      (integral domains)
//   submul(dst, c, src)  : dst <- dst - c * src, elementwise
//   random(rng)          : uniform sample (fields)

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "shiftlab/kernels.hpp"

namespace shiftlab::field {

using Rng = std::mt19937_64;

// GF(p), p prime below 2^62.
class PrimeField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  explicit PrimeField(std::uint64_t p);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem add(Elem a, Elem b) const {
    const Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem random(Rng& rng) const;
  void submul(std::span<Elem> dst, Elem c, std::span<const Elem> src) const;
  std::string to_string(Elem a) const { return std::to_string(a); }

 private:
  std::uint64_t p_;
  bool small_;  // p < 2^31: the SIMD kernel applies
};

// GF(2^e) for 1 <= e <= 63, elements as bit vectors over the polynomial basis.
class BinaryExtField {
 public:
  using Elem = std::uint64_t;
  static constexpr bool is_field = true;

  // modulus: irreducible polynomial over GF(2) with bit e set.
  explicit BinaryExtField(std::uint64_t modulus);

  std::uint64_t characteristic() const { return 2; }
  unsigned degree() const { return mod_.degree; }
  std::uint64_t modulus() const { return mod_.poly; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const { return static_cast<Elem>(v & 1); }
  Elem from_mpz(const mpz_class& v) const { return mpz_odd_p(v.get_mpz_t()) ? 1 : 0; }
  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem sub(Elem a, Elem b) const { return a ^ b; }
  Elem neg(Elem a) const { return a; }
  Elem mul(Elem a, Elem b) const { return kernels::active().gf2e_mul(a, b, mod_); }
  Elem inv(Elem a) const;
  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  Elem random(Rng& rng) const { return rng() & mask_; }
  void submul(std::span<Elem> dst, Elem c, std::span<const Elem> src) const {
    kernels::active().gf2e_addmul(dst.data(), src.data(), dst.size(), c, mod_);
  }
  std::string to_string(Elem a) const;

 private:
  kernels::Gf2eModulus mod_;
  std::uint64_t mask_;
};

// GF(p^e) in general: coefficient vectors of length e over GF(p), reduced
// modulo a monic irreducible of degree e. Slow; used when neither of the
// specialised fields applies.
class ExtensionField {
 public:
  using Elem = std::vector<std::uint64_t>;
  static constexpr bool is_field = true;

  // modulus: monic, coefficients low to high, size e + 1.
  ExtensionField(std::uint64_t p, std::vector<std::uint64_t> modulus);

  std::uint64_t characteristic() const { return base_.characteristic(); }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  Elem zero() const { return Elem(degree(), 0); }
  Elem one() const;
  Elem from_int(std::int64_t v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem random(Rng& rng) const;
  void submul(std::span<Elem> dst, const Elem& c, std::span<const Elem> src) const;
  std::string to_string(const Elem& a) const;

 private:
  PrimeField base_;
  std::vector<std::uint64_t> modulus_;
};

// Z with arbitrary precision; an integral domain for fraction-free elimination.
class IntegerRing {
 public:
  using Elem = mpz_class;
  static constexpr bool is_field = false;

  std::uint64_t characteristic() const { return 0; }
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t v) const { return mpz_class(static_cast<long>(v)); }
  Elem from_mpz(const mpz_class& v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem divexact(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  void submul(std::span<Elem> dst, const Elem& c, std::span<const Elem> src) const {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] -= c * src[i];
  }
  std::string to_string(const Elem& a) const { return a.get_str(); }
};

// Univariate polynomials over GF(p), coefficients low to high, no trailing zeros.
namespace gfpoly {
using Poly = std::vector<std::uint64_t>;
void trim(Poly& f);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly mod(Poly a, const Poly& m, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly powmod(const Poly& base, const mpz_class& exp, const Poly& m, std::uint64_t p);
// Rabin's test for a monic polynomial of degree >= 1.
bool is_irreducible(const Poly& f, std::uint64_t p);
}  // namespace gfpoly

// A concrete finite field GF(p^e) described by its defining polynomial.
struct ExtensionSpec {
  std::uint64_t p = 2;
  unsigned degree = 1;
  std::vector<std::uint64_t> modulus;  // monic, low to high, size degree + 1
};

// Smallest e with p^e >= min_size, together with a monic irreducible of
// degree e over GF(p), picked by seeded rejection sampling.
ExtensionSpec gf_extension(std::uint64_t p, const mpz_class& min_size, std::uint64_t seed);

}  // namespace shiftlab::field
