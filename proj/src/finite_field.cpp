#include "shiftlab/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>
#include <stdexcept>

#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab::field {

// ---- PrimeField ----------------------------------------------------------

PrimeField::PrimeField(std::uint64_t p) : p_(p), small_(p < (std::uint64_t{1} << 31)) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p)) {
    throw PreconditionError("PrimeField: modulus must be a prime below 2^62");
  }
}

PrimeField::Elem PrimeField::from_int(std::int64_t v) const {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = v % p;
  if (r < 0) r += p;
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_mpz(const mpz_class& v) const {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
  return r.get_ui();
}

PrimeField::Elem PrimeField::mul(Elem a, Elem b) const { return mulmod(a, b, p_); }

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw InternalError("PrimeField: inverse of zero");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0;
  __int128 new_t = 1;
  __int128 r = p_;
  __int128 new_r = a;
  while (new_r != 0) {
    const __int128 q = r / new_r;
    const __int128 tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const __int128 tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += p_;
  return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::random(Rng& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
  return dist(rng);
}

void PrimeField::submul(std::span<Elem> dst, Elem c, std::span<const Elem> src) const {
  if (c == 0) return;
  if (small_) {
    kernels::active().gfp_submul(dst.data(), src.data(), dst.size(), c,
                                 kernels::shoup_companion(c, p_), p_);
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = sub(dst[i], mulmod(c, src[i], p_));
}

// ---- BinaryExtField ------------------------------------------------------

BinaryExtField::BinaryExtField(std::uint64_t modulus) : mod_(kernels::make_gf2e_modulus(modulus)) {
  mask_ = (std::uint64_t{1} << mod_.degree) - 1;
}

BinaryExtField::Elem BinaryExtField::inv(Elem a) const {
  if (a == 0) throw InternalError("BinaryExtField: inverse of zero");
  // a^(2^e - 2) by square-and-multiply.
  Elem result = 1;
  Elem base = a;
  for (unsigned i = 1; i < mod_.degree; ++i) {
    base = mul(base, base);
    result = mul(result, base);
  }
  return result;
}

std::string BinaryExtField::to_string(Elem a) const {
  if (a == 0) return "0";
  std::string s;
  for (int i = static_cast<int>(mod_.degree) - 1; i >= 0; --i) {
    if (((a >> i) & 1U) == 0) continue;
    if (!s.empty()) s += "+";
    s += i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i));
  }
  return s;
}

// ---- univariate polynomials over GF(p) -----------------------------------

namespace gfpoly {

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

Poly mod(Poly a, const Poly& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = shiftlab::powmod(m.back(), p - 2, p);
  while (a.size() > dm) {
    const std::uint64_t c = mulmod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod(c, m[i], p)) % p;
    }
    trim(a);
  }
  return a;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint64_t li = shiftlab::powmod(a.back(), p - 2, p);
    for (auto& c : a) c = mulmod(c, li, p);
  }
  return a;
}

Poly powmod(const Poly& base, const mpz_class& exp, const Poly& m, std::uint64_t p) {
  Poly result{1};
  result = mod(result, m, p);
  Poly b = mod(base, m, p);
  const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), m, p);
    if (mpz_tstbit(exp.get_mpz_t(), i) != 0) result = mod(mul(result, b, p), m, p);
  }
  return result;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  auto x_pow_p_pow = [&](std::size_t e) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), p, e);
    return powmod(x, q, f, p);
  };
  // x^(p^n) = x mod f, and gcd(x^(p^(n/q)) - x, f) = 1 for each prime q | n.
  if (sub(x_pow_p_pow(n), x, p) != Poly{}) return false;
  std::size_t rest = n;
  for (std::size_t q = 2; q <= rest; ++q) {
    if (rest % q != 0) continue;
    while (rest % q == 0) rest /= q;
    const Poly g = gcd(f, sub(x_pow_p_pow(n / q), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace gfpoly

// ---- ExtensionField ------------------------------------------------------

ExtensionField::ExtensionField(std::uint64_t p, std::vector<std::uint64_t> modulus)
    : base_(p), modulus_(std::move(modulus)) {
  if (modulus_.size() < 2 || modulus_.back() != 1) {
    throw PreconditionError("ExtensionField: modulus must be monic of degree >= 1");
  }
}

ExtensionField::Elem ExtensionField::one() const {
  Elem e(degree(), 0);
  e[0] = 1;
  return e;
}

ExtensionField::Elem ExtensionField::from_int(std::int64_t v) const {
  Elem e(degree(), 0);
  e[0] = base_.from_int(v);
  return e;
}

ExtensionField::Elem ExtensionField::from_mpz(const mpz_class& v) const {
  Elem e(degree(), 0);
  e[0] = base_.from_mpz(v);
  return e;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.add(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.sub(a[i], b[i]);
  return r;
}

ExtensionField::Elem ExtensionField::neg(const Elem& a) const {
  Elem r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = base_.neg(a[i]);
  return r;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  const std::size_t e = degree();
  std::vector<std::uint64_t> prod(2 * e - 1, 0);
  for (std::size_t i = 0; i < e; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < e; ++j) {
      prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
    }
  }
  // Reduce by the monic modulus from the top down.
  for (std::size_t k = prod.size(); k-- > e;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i < e; ++i) {
      prod[k - e + i] = base_.sub(prod[k - e + i], base_.mul(c, modulus_[i]));
    }
  }
  prod.resize(e);
  return prod;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw InternalError("ExtensionField: inverse of zero");
  // a^(q-2), q = p^e.
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), characteristic(), degree());
  q -= 2;
  Elem result = one();
  const std::size_t bits = mpz_sizeinbase(q.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = mul(result, result);
    if (mpz_tstbit(q.get_mpz_t(), i) != 0) result = mul(result, a);
  }
  return result;
}

bool ExtensionField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](std::uint64_t c) { return c == 0; });
}

ExtensionField::Elem ExtensionField::random(Rng& rng) const {
  Elem e(degree());
  for (auto& c : e) c = base_.random(rng);
  return e;
}

void ExtensionField::submul(std::span<Elem> dst, const Elem& c, std::span<const Elem> src) const {
  if (is_zero(c)) return;
  for (std::size_t i = 0; i < dst.size(); ++i) {
    if (!is_zero(src[i])) dst[i] = sub(dst[i], mul(c, src[i]));
  }
}

std::string ExtensionField::to_string(const Elem& a) const {
  std::string s = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(a[i]);
  }
  return s + "]";
}

// ---- IntegerRing ---------------------------------------------------------

IntegerRing::Elem IntegerRing::divexact(const Elem& a, const Elem& b) const {
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// ---- gf_extension --------------------------------------------------------

ExtensionSpec gf_extension(std::uint64_t p, const mpz_class& min_size, std::uint64_t seed) {
  if (!is_prime(p)) throw PreconditionError("gf_extension: p must be prime");
  if (min_size < p) throw PreconditionError("gf_extension: minSize must be at least p");
  ExtensionSpec spec;
  spec.p = p;
  spec.degree = 1;
  mpz_class size = p;
  while (size < min_size) {
    size *= p;
    ++spec.degree;
  }
  if (spec.degree == 1) {
    spec.modulus = {0, 1};
    return spec;
  }
  // The search is deterministic in (p, e, seed); remember the answers.
  static std::mutex cache_mutex;
  static std::map<std::tuple<std::uint64_t, unsigned, std::uint64_t>, gfpoly::Poly> cache;
  const auto key = std::make_tuple(p, spec.degree, seed);
  {
    const std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end()) {
      spec.modulus = it->second;
      return spec;
    }
  }
  Rng rng(hash_combine(seed, (p << 8U) ^ spec.degree));
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    gfpoly::Poly f(spec.degree + 1, 0);
    for (unsigned i = 0; i < spec.degree; ++i) f[i] = coeff(rng);
    f[spec.degree] = 1;
    if (f[0] == 0) continue;
    if (gfpoly::is_irreducible(f, p)) {
      const std::lock_guard<std::mutex> lock(cache_mutex);
      cache.emplace(key, f);
      spec.modulus = std::move(f);
      return spec;
    }
  }
}

}  // namespace shiftlab::field
