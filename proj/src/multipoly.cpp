#include "shiftlab/multipoly.hpp"

#include <algorithm>
#include <cctype>

#include "shiftlab/error.hpp"

namespace shiftlab {

std::string Var::name() const {
  if (row == 0) {
    return col < 10 ? "x" + std::to_string(col) : "x_{" + std::to_string(col) + "}";
  }
  if (row < 10 && col < 10) return "x" + std::to_string(row) + std::to_string(col);
  return "x_{" + std::to_string(row) + "," + std::to_string(col) + "}";
}

void throw_unassigned(Var v) {
  throw PreconditionError("poly_eval: no value for variable " + v.name());
}

// ---- Monomial ------------------------------------------------------------

Monomial Monomial::of(Var v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) {
    m.f_.emplace_back(v.key(), exp);
    m.degree_ = exp;
  }
  return m;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f_.size() || j < o.f_.size()) {
    if (j == o.f_.size() || (i < f_.size() && f_[i].first < o.f_[j].first)) {
      r.f_.push_back(f_[i++]);
    } else if (i == f_.size() || o.f_[j].first < f_[i].first) {
      r.f_.push_back(o.f_[j++]);
    } else {
      r.f_.emplace_back(f_[i].first, f_[i].second + o.f_[j].second);
      ++i;
      ++j;
    }
  }
  r.degree_ = degree_ + o.degree_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  std::size_t j = 0;
  for (const auto& [k, e] : f_) {
    while (j < o.f_.size() && o.f_[j].first < k) ++j;
    if (j == o.f_.size() || o.f_[j].first != k || o.f_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  Monomial r;
  std::size_t i = 0;
  for (const auto& [k, e] : o.f_) {
    std::uint32_t left = e;
    if (i < f_.size() && f_[i].first == k) left -= f_[i++].second;
    if (left > 0) r.f_.emplace_back(k, left);
  }
  r.degree_ = o.degree_ - degree_;
  return r;
}

int Monomial::compare(const Monomial& o) const {
  if (degree_ != o.degree_) return degree_ > o.degree_ ? 1 : -1;
  const std::size_t n = std::min(f_.size(), o.f_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (f_[i].first != o.f_[i].first) return f_[i].first < o.f_[i].first ? 1 : -1;
    if (f_[i].second != o.f_[i].second) return f_[i].second > o.f_[i].second ? 1 : -1;
  }
  // Equal degree and equal common prefix forces equal length.
  return 0;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [k, e] : f_) {
    if (!s.empty()) s += "*";
    s += Var::from_key(k).name();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ---- MultiPoly -----------------------------------------------------------

unsigned MultiPoly::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::vector<Var> MultiPoly::variables() const {
  std::vector<std::uint16_t> keys;
  for (const auto& t : terms_) {
    for (const auto& f : t.mono.factors()) keys.push_back(f.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<Var> out;
  out.reserve(keys.size());
  for (auto k : keys) out.push_back(Var::from_key(k));
  return out;
}

namespace {

// Sorts descending, merges equal monomials, drops zeros.
std::vector<Term> canonical(std::vector<Term> terms, std::uint64_t p) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.mono.compare(b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
    if (p != 0) mpz_fdiv_r_ui(out.back().coeff.get_mpz_t(), out.back().coeff.get_mpz_t(), p);
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return out;
}

}  // namespace

MultiPoly MultiPoly::rename(const std::function<Var(Var)>& f, std::uint64_t modulus) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (const auto& [k, e] : t.mono.factors()) m = m * Monomial::of(f(Var::from_key(k)), e);
    out.push_back({std::move(m), t.coeff});
  }
  MultiPoly r;
  r.terms_ = canonical(std::move(out), modulus);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& t : terms_) {
    mpz_class c = t.coeff;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (s.empty()) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    if (t.mono.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + "*";
      s += t.mono.to_string();
    }
  }
  return s;
}

// ---- PolyRing ------------------------------------------------------------

void PolyRing::normalize(mpz_class& c) const {
  if (p_ != 0) mpz_fdiv_r_ui(c.get_mpz_t(), c.get_mpz_t(), p_);
}

MultiPoly PolyRing::from_int(std::int64_t v) const { return from_mpz(mpz_class(static_cast<long>(v))); }

MultiPoly PolyRing::from_mpz(const mpz_class& v) const { return term(v, Monomial{}); }

MultiPoly PolyRing::variable(Var v) const { return term(1, Monomial::of(v)); }

MultiPoly PolyRing::term(const mpz_class& c, const Monomial& m) const {
  mpz_class r = c;
  normalize(r);
  if (sgn(r) == 0) return {};
  return from_sorted({Term{m, r}});
}

MultiPoly PolyRing::reduce(const Elem& a) const {
  if (p_ == 0) return a;
  return from_sorted(canonical(a.terms_, p_));
}

MultiPoly PolyRing::add(const Elem& a, const Elem& b) const {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < x.size() && j < y.size()) {
    const int c = x[i].mono.compare(y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back(y[j++]);
    } else {
      mpz_class s = x[i].coeff + y[j].coeff;
      normalize(s);
      if (sgn(s) != 0) out.push_back({x[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back(y[j]);
  return from_sorted(std::move(out));
}

MultiPoly PolyRing::neg(const Elem& a) const {
  std::vector<Term> out = a.terms_;
  for (auto& t : out) {
    t.coeff = -t.coeff;
    normalize(t.coeff);
  }
  return from_sorted(std::move(out));
}

MultiPoly PolyRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

MultiPoly PolyRing::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  return from_sorted(canonical(std::move(out), p_));
}

MultiPoly PolyRing::pow(const Elem& a, unsigned e) const {
  Elem r = one();
  for (unsigned i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

MultiPoly PolyRing::divexact(const Elem& a, const Elem& b) const {
  if (b.is_zero()) throw InternalError("PolyRing::divexact: division by zero");
  const Term& lead = b.terms_.front();
  mpz_class lead_inv;
  if (p_ != 0) {
    const mpz_class modulus(static_cast<unsigned long>(p_));
    mpz_invert(lead_inv.get_mpz_t(), lead.coeff.get_mpz_t(), modulus.get_mpz_t());
  }
  std::vector<Term> quotient;
  Elem rest = a;
  while (!rest.is_zero()) {
    const Term& top = rest.terms_.front();
    if (!lead.mono.divides(top.mono)) throw InternalError("PolyRing::divexact: not exact");
    mpz_class c;
    if (p_ == 0) {
      if (!mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
        throw InternalError("PolyRing::divexact: not exact");
      }
      mpz_divexact(c.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    } else {
      c = top.coeff * lead_inv;
      normalize(c);
    }
    Term q{lead.mono.quotient(top.mono), c};
    rest = sub(rest, mul(from_sorted({q}), b));
    quotient.push_back(std::move(q));
  }
  // Quotient terms come out in decreasing order already.
  return from_sorted(std::move(quotient));
}

MultiPoly PolyRing::parse(const std::string& text) const {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  };
  auto fail = [&](const std::string& why) -> MultiPoly {
    throw ParseError("polynomial \"" + text + "\": " + why + " at offset " + std::to_string(pos));
  };
  auto number = [&]() -> mpz_class {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    return mpz_class(text.substr(start, pos - start));
  };
  auto small_number = [&]() -> unsigned {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
    if (pos == start || pos - start > 3) fail("expected an index");
    const unsigned v = static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
    if (v == 0 || v > 255) fail("index out of range");
    return v;
  };
  auto factor = [&]() -> MultiPoly {
    skip();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
      return from_mpz(number());
    }
    if (pos >= text.size() || text[pos] != 'x') return fail("expected a number or variable");
    ++pos;
    Var v;
    if (pos < text.size() && text[pos] == '_') {
      ++pos;
      if (pos >= text.size() || text[pos] != '{') return fail("expected '{'");
      ++pos;
      const unsigned first = small_number();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        v = var(first, small_number());
      } else {
        v = var(first);
      }
      if (pos >= text.size() || text[pos] != '}') return fail("expected '}'");
      ++pos;
    } else {
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
      const std::string digits = text.substr(start, pos - start);
      if (digits.size() == 1 && digits[0] != '0') {
        v = var(static_cast<unsigned>(digits[0] - '0'));
      } else if (digits.size() == 2 && digits[0] != '0' && digits[1] != '0') {
        v = var(static_cast<unsigned>(digits[0] - '0'), static_cast<unsigned>(digits[1] - '0'));
      } else {
        return fail("ambiguous variable name (use x_{i,j})");
      }
    }
    MultiPoly base = variable(v);
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      const mpz_class e = number();
      if (e > 1000) return fail("exponent too large");
      base = pow(base, static_cast<unsigned>(e.get_ui()));
    }
    return base;
  };
  auto monomial = [&]() -> MultiPoly {
    MultiPoly m = factor();
    for (;;) {
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        m = mul(m, factor());
      } else {
        return m;
      }
    }
  };
  MultiPoly result;
  skip();
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  result = monomial();
  if (negative) result = neg(result);
  for (;;) {
    skip();
    if (pos == text.size()) return result;
    const char op = text[pos];
    if (op != '+' && op != '-') return fail("expected '+' or '-'");
    ++pos;
    const MultiPoly next = monomial();
    result = op == '+' ? add(result, next) : sub(result, next);
  }
}

}  // namespace shiftlab
