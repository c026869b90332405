#include "shiftlab/combstruct.hpp"

#include <algorithm>

#include "shiftlab/error.hpp"
#include "shiftlab/number_theory.hpp"

namespace shiftlab {

namespace {

struct LexLess {
  bool operator()(Subset a, Subset b) const { return lex_less(a, b); }
};

}  // namespace

int lex_compare(Subset a, Subset b, unsigned n) {
  if (subset_size(a) != subset_size(b)) throw PreconditionError("lex_compare: subsets of different size");
  if (((a | b) & ~full_set(n)) != 0) throw PreconditionError("lex_compare: element outside [n]");
  if (a == b) return 0;
  return lex_less(a, b) ? -1 : 1;
}

bool dominates(Subset a, Subset b) {
  if (subset_size(a) != subset_size(b)) throw PreconditionError("dominates: subsets of different size");
  // a_i <= b_i for all i  <=>  |a & [t]| >= |b & [t]| for every prefix [t].
  for (unsigned t = 1; t <= kMaxVertices; ++t) {
    const Subset prefix = full_set(t);
    if (subset_size(a & prefix) < subset_size(b & prefix)) return false;
  }
  return true;
}

std::vector<unsigned> elements(Subset s) {
  std::vector<unsigned> out;
  while (s != 0) {
    out.push_back(min_element(s));
    s &= s - 1;
  }
  return out;
}

Subset subset_of(const std::vector<unsigned>& elems) {
  Subset s = 0;
  for (auto e : elems) {
    if (e < 1 || e > kMaxVertices) throw PreconditionError("vertex out of range: " + std::to_string(e));
    if (contains(s, e)) throw PreconditionError("repeated vertex " + std::to_string(e));
    s |= element_bit(e);
  }
  return s;
}

std::string subset_to_string(Subset s, unsigned n) {
  std::string out;
  if (n < 10) {
    for (auto e : elements(s)) out += std::to_string(e);
    return out.empty() ? "{}" : out;
  }
  out = "{";
  for (auto e : elements(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(e);
  }
  return out + "}";
}

std::vector<Subset> all_subsets(unsigned n, unsigned k) {
  std::vector<Subset> out;
  if (k > n) return out;
  out.reserve(binomial(n, k));
  std::vector<unsigned> c(k);
  for (unsigned i = 0; i < k; ++i) c[i] = i + 1;
  for (;;) {
    out.push_back(subset_of(c));
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && c[i] == n - k + static_cast<unsigned>(i) + 1) --i;
    if (i < 0) break;
    ++c[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

std::uint64_t lex_rank(Subset s, unsigned n) {
  // Count the k-subsets that are lex smaller: at each element e (the t-th,
  // 0-based), every choice of a smaller element v in (prev, e) followed by
  // any (k-t-1)-subset of (v, n] comes first.
  const auto elems = elements(s);
  const unsigned k = static_cast<unsigned>(elems.size());
  std::uint64_t rank = 0;
  unsigned prev = 0;
  for (unsigned t = 0; t < k; ++t) {
    for (unsigned v = prev + 1; v < elems[t]; ++v) rank += binomial(n - v, k - t - 1);
    prev = elems[t];
  }
  return rank;
}

Subset lex_unrank(std::uint64_t rank, unsigned n, unsigned k) {
  if (rank >= binomial(n, k)) throw PreconditionError("lex_unrank: rank out of range");
  Subset s = 0;
  unsigned v = 1;
  for (unsigned t = 0; t < k; ++t) {
    for (;; ++v) {
      const std::uint64_t block = binomial(n - v, k - t - 1);
      if (rank < block) break;
      rank -= block;
    }
    s |= element_bit(v);
    ++v;
  }
  return s;
}

// ---- UniformHypergraph ---------------------------------------------------

UniformHypergraph::UniformHypergraph(unsigned n, unsigned k, std::vector<Subset> edges)
    : n_(n), k_(k), edges_(std::move(edges)) {
  if (n > kMaxVertices) throw PreconditionError("at most 64 vertices are supported");
  if (k > n) throw PreconditionError("edge size exceeds the number of vertices");
  for (auto e : edges_) {
    if (subset_size(e) != k) {
      throw PreconditionError("edge " + subset_to_string(e, n) + " does not have size " + std::to_string(k));
    }
    if ((e & ~full_set(n)) != 0) throw PreconditionError("edge " + subset_to_string(e, 64) + " exceeds [n]");
  }
  std::sort(edges_.begin(), edges_.end(), LexLess{});
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw PreconditionError("repeated edge in hypergraph");
  }
}

bool UniformHypergraph::contains(Subset s) const {
  return std::binary_search(edges_.begin(), edges_.end(), s, LexLess{});
}

std::string UniformHypergraph::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i > 0) out += ",";
    out += subset_to_string(edges_[i], n_);
  }
  return out + "}";
}

bool hypergraph_lex_less(const UniformHypergraph& a, const UniformHypergraph& b) {
  const auto& x = a.edges();
  const auto& y = b.edges();
  std::size_t i = 0;
  for (; i < x.size() && i < y.size(); ++i) {
    if (x[i] != y[i]) return lex_less(x[i], y[i]);
  }
  // One list is a prefix of the other: the smallest extra edge lies in the longer one.
  return x.size() > y.size();
}

bool is_shifted(const UniformHypergraph& s) {
  for (auto e : s.edges()) {
    for (auto j : elements(e)) {
      for (unsigned i = 1; i < j; ++i) {
        if (contains(e, i)) continue;
        if (!s.contains((e & ~element_bit(j)) | element_bit(i))) return false;
      }
    }
  }
  return true;
}

// ---- SimplicialComplex ---------------------------------------------------

SimplicialComplex SimplicialComplex::from_faces(unsigned n, const std::vector<Subset>& faces) {
  if (n > kMaxVertices) throw PreconditionError("at most 64 vertices are supported");
  SimplicialComplex k;
  k.n_ = n;
  if (faces.empty()) return k;
  std::vector<Subset> all;
  std::vector<Subset> frontier;
  for (auto f : faces) {
    if ((f & ~full_set(n)) != 0) throw PreconditionError("face exceeds [n]");
    frontier.push_back(f);
  }
  // Breadth-first removal of single vertices; duplicates pruned per round.
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
    std::vector<Subset> next;
    for (auto f : frontier) {
      all.push_back(f);
      for (Subset rest = f; rest != 0; rest &= rest - 1) next.push_back(f & ~(rest & (~rest + 1)));
    }
    frontier.swap(next);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  unsigned top = 0;
  for (auto f : all) top = std::max(top, subset_size(f));
  k.by_size_.assign(top + 1, {});
  for (auto f : all) k.by_size_[subset_size(f)].push_back(f);
  for (auto& l : k.by_size_) std::sort(l.begin(), l.end(), LexLess{});
  return k;
}

bool SimplicialComplex::contains(Subset face) const {
  const unsigned s = subset_size(face);
  if (s >= by_size_.size()) return false;
  return std::binary_search(by_size_[s].begin(), by_size_[s].end(), face, LexLess{});
}

std::size_t SimplicialComplex::face_count() const {
  std::size_t c = 0;
  for (const auto& l : by_size_) c += l.size();
  return c;
}

UniformHypergraph SimplicialComplex::layer(int s) const {
  if (s < -1) throw PreconditionError("layer index must be >= -1");
  const auto size = static_cast<std::size_t>(s + 1);
  if (size >= by_size_.size()) return UniformHypergraph(n_, std::min<unsigned>(n_, static_cast<unsigned>(size)), {});
  return UniformHypergraph(n_, static_cast<unsigned>(size), by_size_[size]);
}

std::vector<Subset> SimplicialComplex::facets() const {
  std::vector<Subset> out;
  for (std::size_t size = by_size_.size(); size-- > 0;) {
    for (auto f : by_size_[size]) {
      bool maximal = true;
      if (size + 1 < by_size_.size()) {
        for (unsigned v = 1; v <= n_ && maximal; ++v) {
          if (!shiftlab::contains(f, v) && contains(f | element_bit(v))) maximal = false;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "{";
  bool first = true;
  for (auto f : facets()) {
    if (!first) out += ",";
    first = false;
    out += subset_to_string(f, n_);
  }
  return out + "}";
}

std::optional<SimplicialComplex> try_complex_from_layers(unsigned n, const std::vector<UniformHypergraph>& layers,
                                                         Subset* witness) {
  SimplicialComplex k;
  k.n_ = n;
  std::vector<std::vector<Subset>> by_size;
  for (const auto& l : layers) {
    if (l.n() != n) throw PreconditionError("complex_from_layers: layers on different vertex sets");
    if (l.empty()) continue;
    if (by_size.size() <= l.k()) by_size.resize(l.k() + 1u);
    by_size[l.k()].insert(by_size[l.k()].end(), l.edges().begin(), l.edges().end());
  }
  for (auto& l : by_size) {
    std::sort(l.begin(), l.end(), LexLess{});
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  while (!by_size.empty() && by_size.back().empty()) by_size.pop_back();
  if (!by_size.empty()) by_size[0] = {0};
  k.by_size_ = by_size;
  for (std::size_t size = 1; size < k.by_size_.size(); ++size) {
    for (auto f : k.by_size_[size]) {
      for (Subset rest = f; rest != 0; rest &= rest - 1) {
        if (!k.contains(f & ~(rest & (~rest + 1)))) {
          if (witness != nullptr) *witness = f;
          return std::nullopt;
        }
      }
    }
  }
  return k;
}

SimplicialComplex complex_from_layers(unsigned n, const std::vector<UniformHypergraph>& layers) {
  Subset witness = 0;
  auto k = try_complex_from_layers(n, layers, &witness);
  if (!k) {
    throw PreconditionError("layers are not closed under taking subsets: face " + subset_to_string(witness, n) +
                            " has a missing boundary face");
  }
  return *k;
}

FVector f_vector(const SimplicialComplex& k) {
  FVector f;
  for (int s = -1; s <= k.dimension(); ++s) f.push_back(k.layer(s).size());
  return f;
}

bool is_near_cone(const SimplicialComplex& k) {
  for (int s = 0; s <= k.dimension(); ++s) {
    for (auto face : k.layer(s).edges()) {
      if (contains(face, 1)) continue;
      for (Subset rest = face; rest != 0; rest &= rest - 1) {
        const Subset swapped = (face & ~(rest & (~rest + 1))) | element_bit(1);
        if (!k.contains(swapped)) return false;
      }
    }
  }
  return true;
}

bool is_shifted(const SimplicialComplex& k) {
  for (int s = 0; s <= k.dimension(); ++s) {
    if (!is_shifted(k.layer(s))) return false;
  }
  return true;
}

}  // namespace shiftlab
