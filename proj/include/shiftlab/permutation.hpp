#pragma once

// The symmetric group S_n acting on [n] from the right: i.(vw) = (i.v).w.
// The permutation matrix of w is (delta_{i.w, j}), so e_i w = e_{i.w}.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace shiftlab {

using Inversion = std::pair<unsigned, unsigned>;  // (i, j) with i < j
using InversionSet = std::vector<Inversion>;       // sorted

class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(unsigned n);  // identity
  // One-line notation [1.w, ..., n.w]; throws PreconditionError if not a permutation.
  explicit Permutation(std::vector<unsigned> images);

  static Permutation identity(unsigned n) { return Permutation(n); }
  // s_i = (i i+1)
  static Permutation simple(unsigned n, unsigned i);
  static Permutation transposition(unsigned n, unsigned i, unsigned j);
  // Product s_{a_1} s_{a_2} ... left to right.
  static Permutation from_word(unsigned n, const std::vector<unsigned>& word);
  static Permutation longest(unsigned n);  // w0: i -> n + 1 - i
  static Permutation cycle(unsigned n);    // c_n = (1 2 ... n): i -> i + 1, n -> 1

  unsigned n() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_[i - 1]; }  // i.w
  const std::vector<unsigned>& images() const { return images_; }

  Permutation operator*(const Permutation& w) const;  // this, then w
  Permutation inverse() const;

  InversionSet inversions() const;
  unsigned length() const;
  bool is_inversion(unsigned i, unsigned j) const { return (*this)(i) > (*this)(j); }
  // A reduced word (lexicographically first by right descents).
  std::vector<unsigned> reduced_word() const;
  // (i, j) if this is the transposition of i < j.
  bool is_transposition(unsigned* i = nullptr, unsigned* j = nullptr) const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.images_ == b.images_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.images_ < b.images_; }

  std::string to_string() const;  // one-line, e.g. "2,3,1"

  // Dense index in [0, n!) (lexicographic on one-line notation) and back.
  std::uint64_t index() const;
  static Permutation from_index(unsigned n, std::uint64_t index);

 private:
  std::vector<unsigned> images_;
};

std::uint64_t factorial(unsigned n);
std::vector<Permutation> all_permutations(unsigned n);  // lex on one-line notation

// w >= u in the right weak order: l(u) + l(u^{-1} w) = l(w).
bool weak_order_geq(const Permutation& w, const Permutation& u);

// inv(v) symmetric-difference (inv(w)).v^{-1}.
InversionSet inv_of_product(const Permutation& v, const Permutation& w);

// Accepts "e", "w0", "cN" / "c", one-line "2,3,1" or "[2,3,1]", and words
// "s1 s2 s1" / "s1s2s1", and products of these tokens ("w0 s1").
Permutation parse_permutation(const std::string& text, unsigned n);

}  // namespace shiftlab
