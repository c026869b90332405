#pragma once

// k-subsets of [n] as bitmasks (element i <-> bit i-1, n <= 64), uniform
// hypergraphs, and simplicial complexes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace shiftlab {

using Subset = std::uint64_t;

constexpr unsigned kMaxVertices = 64;

inline Subset element_bit(unsigned i) { return Subset{1} << (i - 1); }
inline bool contains(Subset s, unsigned i) { return (s >> (i - 1)) & 1U; }
inline unsigned subset_size(Subset s) { return static_cast<unsigned>(__builtin_popcountll(s)); }
inline unsigned min_element(Subset s) { return static_cast<unsigned>(__builtin_ctzll(s)) + 1; }
inline Subset full_set(unsigned n) { return n == 64 ? ~Subset{0} : (Subset{1} << n) - 1; }

// Lex order: a < b iff min(a symmetric-difference b) lies in a.
inline bool lex_less(Subset a, Subset b) {
  const Subset d = a ^ b;
  return d != 0 && (a & d & (~d + 1)) != 0;
}

// -1, 0, +1. Throws PreconditionError when the sizes differ or an element exceeds n.
int lex_compare(Subset a, Subset b, unsigned n);

// a <= b in the domination order: a_i <= b_i on sorted elements.
// Throws PreconditionError on size mismatch.
bool dominates(Subset a, Subset b);

std::vector<unsigned> elements(Subset s);
Subset subset_of(const std::vector<unsigned>& elems);
// "123" for n < 10, "{1,10,12}" otherwise.
std::string subset_to_string(Subset s, unsigned n);

// All k-subsets of [n] in lex order.
std::vector<Subset> all_subsets(unsigned n, unsigned k);
// Position of s in all_subsets(n, |s|), and its inverse.
std::uint64_t lex_rank(Subset s, unsigned n);
Subset lex_unrank(std::uint64_t rank, unsigned n, unsigned k);

class UniformHypergraph {
 public:
  UniformHypergraph() = default;
  // Sorts and checks: distinct edges, all of size k, inside [n].
  UniformHypergraph(unsigned n, unsigned k, std::vector<Subset> edges);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Subset>& edges() const& { return edges_; }
  // by value on temporaries, so `for (auto e : k.layer(s).edges())` is safe
  std::vector<Subset> edges() && { return std::move(edges_); }
  bool contains(Subset s) const;

  friend bool operator==(const UniformHypergraph& a, const UniformHypergraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.edges_ == b.edges_;
  }
  std::string to_string() const;

 private:
  unsigned n_ = 0;
  unsigned k_ = 0;
  std::vector<Subset> edges_;  // lex increasing
};

// Lex order on hypergraphs: S < T iff the lex-smallest edge of S xor T lies in S.
bool hypergraph_lex_less(const UniformHypergraph& a, const UniformHypergraph& b);

struct HypergraphLess {
  bool operator()(const UniformHypergraph& a, const UniformHypergraph& b) const {
    return hypergraph_lex_less(a, b);
  }
};

bool is_shifted(const UniformHypergraph& s);

using FVector = std::vector<std::uint64_t>;  // f_{-1}, f_0, ..., f_dim

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  // Downward closure of the given faces. The void complex when faces is empty.
  static SimplicialComplex from_faces(unsigned n, const std::vector<Subset>& faces);

  unsigned n() const { return n_; }
  bool empty() const { return by_size_.empty(); }
  int dimension() const { return static_cast<int>(by_size_.size()) - 2; }
  bool contains(Subset face) const;
  std::size_t face_count() const;

  // The s-faces, i.e. the (s+1)-subsets, as a hypergraph; s >= -1.
  UniformHypergraph layer(int s) const;
  std::vector<Subset> facets() const;  // lex order within size, larger faces first

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.by_size_ == b.by_size_;
  }
  std::string to_string() const;  // facets, e.g. "{123,124,56}"

 private:
  friend std::optional<SimplicialComplex> try_complex_from_layers(unsigned, const std::vector<UniformHypergraph>&, Subset*);
  unsigned n_ = 0;
  std::vector<std::vector<Subset>> by_size_;  // by_size_[j]: faces of size j, lex order
};

// Union of the layers plus the empty face. Throws PreconditionError naming
// a face whose boundary is missing if the union is not closed.
SimplicialComplex complex_from_layers(unsigned n, const std::vector<UniformHypergraph>& layers);
std::optional<SimplicialComplex> try_complex_from_layers(unsigned n, const std::vector<UniformHypergraph>& layers,
                                                         Subset* witness);

FVector f_vector(const SimplicialComplex& k);
bool is_near_cone(const SimplicialComplex& k);
bool is_shifted(const SimplicialComplex& k);

}  // namespace shiftlab
