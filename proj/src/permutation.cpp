#include "shiftlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "shiftlab/error.hpp"

namespace shiftlab {

Permutation::Permutation(unsigned n) : images_(n) { std::iota(images_.begin(), images_.end(), 1U); }

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto x : images_) {
    if (x < 1 || x > images_.size() || seen[x]) {
      throw PreconditionError("not a permutation in one-line notation");
    }
    seen[x] = true;
  }
}

Permutation Permutation::simple(unsigned n, unsigned i) {
  if (i < 1 || i + 1 > n) {
    throw PreconditionError("simple transposition s" + std::to_string(i) + " out of range for n = " + std::to_string(n));
  }
  return transposition(n, i, i + 1);
}

Permutation Permutation::transposition(unsigned n, unsigned i, unsigned j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) throw PreconditionError("invalid transposition");
  Permutation p(n);
  std::swap(p.images_[i - 1], p.images_[j - 1]);
  return p;
}

Permutation Permutation::from_word(unsigned n, const std::vector<unsigned>& word) {
  Permutation p(n);
  for (auto i : word) p = p * simple(n, i);
  return p;
}

Permutation Permutation::longest(unsigned n) {
  Permutation p(n);
  for (unsigned i = 1; i <= n; ++i) p.images_[i - 1] = n + 1 - i;
  return p;
}

Permutation Permutation::cycle(unsigned n) {
  Permutation p(n);
  for (unsigned i = 1; i <= n; ++i) p.images_[i - 1] = i == n ? 1 : i + 1;
  return p;
}

Permutation Permutation::operator*(const Permutation& w) const {
  if (n() != w.n()) throw PreconditionError("composing permutations of different degree");
  Permutation p(n());
  for (unsigned i = 0; i < n(); ++i) p.images_[i] = w.images_[images_[i] - 1];
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p(n());
  for (unsigned i = 0; i < n(); ++i) p.images_[images_[i] - 1] = i + 1;
  return p;
}

InversionSet Permutation::inversions() const {
  InversionSet out;
  for (unsigned i = 1; i <= n(); ++i) {
    for (unsigned j = i + 1; j <= n(); ++j) {
      if (is_inversion(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

unsigned Permutation::length() const {
  unsigned l = 0;
  for (unsigned i = 1; i <= n(); ++i) {
    for (unsigned j = i + 1; j <= n(); ++j) l += is_inversion(i, j) ? 1 : 0;
  }
  return l;
}

std::vector<unsigned> Permutation::reduced_word() const {
  // Peel right descents. w s_i swaps the values i and i+1, so l(w s_i) < l(w)
  // iff i+1 stands left of i in one-line notation.
  std::vector<unsigned> word;
  Permutation w = *this;
  for (;;) {
    const Permutation inv = w.inverse();
    unsigned i = 1;
    while (i < n() && inv(i) < inv(i + 1)) ++i;
    if (i >= n()) break;
    word.push_back(i);
    w = w * simple(n(), i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

bool Permutation::is_transposition(unsigned* i, unsigned* j) const {
  std::vector<unsigned> moved;
  for (unsigned a = 1; a <= n(); ++a) {
    if ((*this)(a) != a) moved.push_back(a);
  }
  if (moved.size() != 2 || (*this)(moved[0]) != moved[1]) return false;
  if (i != nullptr) *i = moved[0];
  if (j != nullptr) *j = moved[1];
  return true;
}

std::string Permutation::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(images_[i]);
  }
  return s;
}

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw PreconditionError("factorial overflows 64 bits");
  std::uint64_t f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t Permutation::index() const {
  // Lehmer code.
  std::uint64_t idx = 0;
  for (unsigned i = 0; i < n(); ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j < n(); ++j) smaller += images_[j] < images_[i] ? 1 : 0;
    idx = idx * (n() - i) + smaller;
  }
  return idx;
}

Permutation Permutation::from_index(unsigned n, std::uint64_t index) {
  if (index >= factorial(n)) throw PreconditionError("permutation index out of range");
  std::vector<unsigned> digits(n);
  for (unsigned i = n; i-- > 0;) {
    digits[i] = static_cast<unsigned>(index % (n - i));
    index /= (n - i);
  }
  std::vector<unsigned> pool(n);
  std::iota(pool.begin(), pool.end(), 1U);
  std::vector<unsigned> images;
  for (unsigned i = 0; i < n; ++i) {
    images.push_back(pool[digits[i]]);
    pool.erase(pool.begin() + digits[i]);
  }
  return Permutation(images);
}

std::vector<Permutation> all_permutations(unsigned n) {
  std::vector<Permutation> out;
  std::vector<unsigned> images(n);
  std::iota(images.begin(), images.end(), 1U);
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

bool weak_order_geq(const Permutation& w, const Permutation& u) {
  if (w.n() != u.n()) throw PreconditionError("weak_order_geq: different degrees");
  return u.length() + (u.inverse() * w).length() == w.length();
}

InversionSet inv_of_product(const Permutation& v, const Permutation& w) {
  if (v.n() != w.n()) throw PreconditionError("inv_of_product: different degrees");
  const Permutation vinv = v.inverse();
  InversionSet moved;
  for (auto [a, b] : w.inversions()) {
    unsigned i = vinv(a);
    unsigned j = vinv(b);
    if (i > j) std::swap(i, j);
    moved.emplace_back(i, j);
  }
  std::sort(moved.begin(), moved.end());
  const InversionSet iv = v.inversions();
  InversionSet out;
  std::set_symmetric_difference(iv.begin(), iv.end(), moved.begin(), moved.end(), std::back_inserter(out));
  return out;
}

namespace {

unsigned parse_index(const std::string& text, std::size_t& pos, const std::string& whole) {
  const std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) ++pos;
  if (pos == start || pos - start > 3) throw ParseError("bad index in permutation \"" + whole + "\"");
  return static_cast<unsigned>(std::stoul(text.substr(start, pos - start)));
}

Permutation parse_token(const std::string& tok, unsigned n, const std::string& whole) {
  if (tok == "e" || tok == "id") return Permutation(n);
  if (tok == "w0") return Permutation::longest(n);
  if (tok == "c" || tok == "cN" || tok == "cn" || tok == "c" + std::to_string(n)) return Permutation::cycle(n);
  if (tok.find(',') != std::string::npos || tok.front() == '[') {
    std::string body = tok;
    if (body.front() == '[') {
      if (body.back() != ']') throw ParseError("unbalanced brackets in permutation \"" + whole + "\"");
      body = body.substr(1, body.size() - 2);
    }
    std::vector<unsigned> images;
    std::size_t pos = 0;
    while (pos < body.size()) {
      images.push_back(parse_index(body, pos, whole));
      if (pos < body.size()) {
        if (body[pos] != ',') throw ParseError("expected ',' in permutation \"" + whole + "\"");
        ++pos;
      }
    }
    if (images.size() != n) {
      throw ParseError("permutation \"" + whole + "\" has " + std::to_string(images.size()) +
                       " entries, expected " + std::to_string(n));
    }
    try {
      return Permutation(images);
    } catch (const PreconditionError& e) {
      throw ParseError("\"" + whole + "\": " + e.what());
    }
  }
  if (tok.front() == 's') {
    std::vector<unsigned> word;
    std::size_t pos = 0;
    while (pos < tok.size()) {
      if (tok[pos] != 's') throw ParseError("bad word in permutation \"" + whole + "\"");
      ++pos;
      word.push_back(parse_index(tok, pos, whole));
    }
    for (auto i : word) {
      if (i < 1 || i >= n) throw ParseError("s" + std::to_string(i) + " out of range for n = " + std::to_string(n));
    }
    return Permutation::from_word(n, word);
  }
  throw ParseError("cannot parse permutation \"" + whole + "\"");
}

}  // namespace

Permutation parse_permutation(const std::string& text, unsigned n) {
  std::istringstream in(text);
  std::string tok;
  Permutation p(n);
  bool any = false;
  while (in >> tok) {
    // "w0s1" and "w0*s1" are accepted as products as well.
    std::vector<std::string> parts;
    std::string current;
    for (std::size_t i = 0; i < tok.size(); ++i) {
      if (tok[i] == '*') {
        if (!current.empty()) parts.push_back(current);
        current.clear();
        continue;
      }
      if (tok.compare(i, 2, "w0") == 0 && tok.find(',') == std::string::npos) {
        if (!current.empty()) parts.push_back(current);
        parts.emplace_back("w0");
        current.clear();
        ++i;
        continue;
      }
      current += tok[i];
    }
    if (!current.empty()) parts.push_back(current);
    for (const auto& part : parts) {
      p = p * parse_token(part, n, text);
      any = true;
    }
  }
  if (!any) throw ParseError("empty permutation");
  return p;
}

}  // namespace shiftlab
