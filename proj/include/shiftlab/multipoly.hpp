#pragma once

// Sparse multivariate polynomials in the variables x_{ij}, with integer or
// mod-p coefficients.
//
// A variable is a pair (row, col) with 1 <= row, col <= 255; row == 0 is
// reserved for the single-index variables x_j of the Vandermonde matrix.
// Variables are ordered by (col, row), monomials by graded lex, terms are
// kept strictly decreasing with nonzero coefficients, so equality is
// structural and the zero polynomial is the empty term list.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace shiftlab {

struct Var {
  std::uint8_t row = 0;
  std::uint8_t col = 0;

  std::uint16_t key() const { return static_cast<std::uint16_t>((col << 8U) | row); }
  static Var from_key(std::uint16_t k) {
    return {static_cast<std::uint8_t>(k & 0xFFU), static_cast<std::uint8_t>(k >> 8U)};
  }
  friend bool operator==(Var a, Var b) { return a.key() == b.key(); }
  std::string name() const;
};

inline Var var(unsigned i, unsigned j) {
  return {static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j)};
}
inline Var var(unsigned j) { return {0, static_cast<std::uint8_t>(j)}; }

// (variable key, exponent) pairs, keys strictly increasing, exponents > 0.
class Monomial {
 public:
  using Factor = std::pair<std::uint16_t, std::uint32_t>;

  Monomial() = default;
  static Monomial of(Var v, std::uint32_t exp = 1);

  const std::vector<Factor>& factors() const { return f_; }
  unsigned degree() const { return degree_; }
  bool is_one() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& o) const;  // o / *this, requires divides(o)

  // Graded lex; +1 if *this is larger.
  int compare(const Monomial& o) const;
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }

  std::string to_string() const;

 private:
  std::vector<Factor> f_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial mono;
  mpz_class coeff;
};

class MultiPoly {
 public:
  MultiPoly() = default;

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  unsigned degree() const;  // total degree; 0 for constants and for zero
  const Term& leading() const { return terms_.front(); }
  std::vector<Var> variables() const;

  // The constant coefficient if the polynomial is constant.
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  mpz_class constant_value() const { return terms_.empty() ? mpz_class(0) : terms_[0].coeff; }

  // Substitute variables by variables.
  MultiPoly rename(const std::function<Var(Var)>& f, std::uint64_t modulus) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  std::string to_string() const;

 private:
  friend class PolyRing;
  std::vector<Term> terms_;
};

// Coefficient ring Z (modulus 0) or Z/p. Acts as the elimination domain for
// fraction-free symbolic rank computations.
class PolyRing {
 public:
  using Elem = MultiPoly;
  static constexpr bool is_field = false;

  explicit PolyRing(std::uint64_t modulus = 0) : p_(modulus) {}
  std::uint64_t characteristic() const { return p_; }

  Elem zero() const { return {}; }
  Elem one() const { return from_int(1); }
  Elem from_int(std::int64_t v) const;
  Elem from_mpz(const mpz_class& v) const;
  Elem variable(Var v) const;
  Elem term(const mpz_class& c, const Monomial& m) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(const Elem& a, unsigned e) const;
  // a / b, which must be exact; throws InternalError otherwise.
  Elem divexact(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  void submul(std::span<Elem> dst, const Elem& c, std::span<const Elem> src) const {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = sub(dst[i], mul(c, src[i]));
  }
  std::string to_string(const Elem& a) const { return a.to_string(); }

  Elem rename(const Elem& a, const std::function<Var(Var)>& f) const { return a.rename(f, p_); }
  // Coefficients reduced into this ring (needed when moving from Z to Z/p).
  Elem reduce(const Elem& a) const;

  // Parses sums of products like "x12*x23 - 3*x13^2 + x_{10,2} + x4 + 7".
  // Two-digit "xij" means x_{i,j}; one digit "xj" is the single-index x_j.
  Elem parse(const std::string& text) const;

 private:
  void normalize(mpz_class& c) const;
  static Elem from_sorted(std::vector<Term> terms) {
    Elem e;
    e.terms_ = std::move(terms);
    return e;
  }
  std::uint64_t p_;
};

// Evaluation at a point with values in a coefficient domain F (see
// finite_field.hpp). Values are indexed by variable key.
template <class F>
struct EvalPoint {
  std::vector<typename F::Elem> values;
  std::vector<bool> assigned;

  void set(Var v, typename F::Elem x) {
    const auto k = v.key();
    if (values.size() <= k) {
      values.resize(k + 1u);
      assigned.resize(k + 1u, false);
    }
    values[k] = std::move(x);
    assigned[k] = true;
  }
  bool has(std::uint16_t k) const { return k < assigned.size() && assigned[k]; }
};

[[noreturn]] void throw_unassigned(Var v);

// Throws PreconditionError when a variable of f has no value.
template <class F>
typename F::Elem poly_eval(const MultiPoly& f, const F& field, const EvalPoint<F>& pt) {
  auto acc = field.zero();
  for (const auto& t : f.terms()) {
    auto value = field.from_mpz(t.coeff);
    for (const auto& [k, e] : t.mono.factors()) {
      if (!pt.has(k)) throw_unassigned(Var::from_key(k));
      const auto& x = pt.values[k];
      for (std::uint32_t i = 0; i < e; ++i) value = field.mul(value, x);
    }
    acc = field.add(acc, value);
  }
  return acc;
}

}  // namespace shiftlab
