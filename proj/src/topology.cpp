#include "shiftlab/topology.hpp"

#include <algorithm>
#include <sstream>

#include <gmpxx.h>

#include "json.hpp"

#include "shiftlab/error.hpp"
#include "shiftlab/finite_field.hpp"
#include "shiftlab/kernels.hpp"
#include "shiftlab/number_theory.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/rank_profile.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

bool operator==(const BettiVector& a, const BettiVector& b) {
  const std::size_t len = std::max(a.betti.size(), b.betti.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = i < a.betti.size() ? a.betti[i] : 0;
    const auto y = i < b.betti.size() ? b.betti[i] : 0;
    if (x != y) return false;
  }
  return true;
}

std::string BettiVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(betti[i]);
  }
  return out + ")";
}

bool betti_geq(const BettiVector& a, const BettiVector& b) {
  const std::size_t len = std::max(a.betti.size(), b.betti.size());
  for (std::size_t i = 0; i < len; ++i) {
    const auto x = i < a.betti.size() ? a.betti[i] : 0;
    const auto y = i < b.betti.size() ? b.betti[i] : 0;
    if (x < y) return false;
  }
  return true;
}

namespace {

std::vector<UniformHypergraph> vertex_layers(const SimplicialComplex& k) {
  std::vector<UniformHypergraph> layers;
  for (int s = 0; s <= k.dimension(); ++s) layers.push_back(k.layer(s));
  return layers;
}

// nullopt and a witness when the shifted layers are not closed.
std::optional<SimplicialComplex> shifted_layers(const SimplicialComplex& k, const GenericMatrix& g,
                                                const FieldContext& ctx, std::string& problem) {
  if (g.n() != k.n()) throw PreconditionError("shift_complex: matrix size differs from the vertex count");
  const auto layers = vertex_layers(k);
  const auto shifted = delta_shift_all(g, layers, ctx);
  Subset witness = 0;
  auto out = try_complex_from_layers(k.n(), shifted, &witness);
  if (!out) {
    problem = "shifted layers are not closed: the boundary of " + subset_to_string(witness, k.n()) + " is missing";
    return std::nullopt;
  }
  if (f_vector(*out) != f_vector(k)) {
    problem = "shifting changed the f-vector";
    return std::nullopt;
  }
  return out;
}

}  // namespace

SimplicialComplex shift_complex(const SimplicialComplex& k, const Permutation& w, const FieldContext& ctx) {
  if (w.n() != k.n()) throw PreconditionError("shift_complex: permutation size differs from the vertex count");
  std::string problem;
  auto out = shifted_layers(k, build_r(w), ctx, problem);
  if (!out) throw InternalError("shift_complex by " + w.to_string() + ": " + problem);
  return *out;
}

SimplicialComplex shift_complex(const SimplicialComplex& k, const GenericMatrix& g, const FieldContext& ctx) {
  std::string problem;
  auto out = shifted_layers(k, g, ctx, problem);
  if (!out) throw PreconditionError("shift_complex: " + problem);
  return *out;
}

namespace {

std::size_t face_index(const std::vector<Subset>& faces, Subset f) {
  auto it = std::lower_bound(faces.begin(), faces.end(), f, lex_less);
  if (it == faces.end() || *it != f) throw InternalError("boundary of a face is missing from the complex");
  return static_cast<std::size_t>(it - faces.begin());
}

std::size_t gf2_rank(const std::vector<Subset>& faces, const std::vector<Subset>& lower) {
  const std::size_t words = (lower.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(faces.size());
  for (auto f : faces) {
    std::vector<std::uint64_t> row(words, 0);
    for (auto v : elements(f)) {
      const auto j = face_index(lower, f & ~element_bit(v));
      row[j / 64] |= std::uint64_t{1} << (j % 64);
    }
    rows.push_back(std::move(row));
  }
  const auto& kern = kernels::active();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < lower.size() && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][w] & bit)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][w] & bit) kern.xor_words(rows[i].data() + w, rows[rank].data() + w, words - w);
    }
    ++rank;
  }
  return rank;
}

template <class D>
std::size_t signed_rank(const D& dom, const std::vector<Subset>& faces, const std::vector<Subset>& lower) {
  Matrix<typename D::Elem> m(faces.size(), lower.size(), dom.zero());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    const auto vs = elements(faces[i]);
    for (std::size_t t = 0; t < vs.size(); ++t) {
      const auto j = face_index(lower, faces[i] & ~element_bit(vs[t]));
      m(i, j) = dom.from_int(t % 2 == 0 ? 1 : -1);
    }
  }
  return rank(dom, m);
}

}  // namespace

std::size_t boundary_rank(const SimplicialComplex& k, int dim, unsigned characteristic) {
  if (dim <= 0 || dim > k.dimension()) return 0;
  const auto faces = k.layer(dim).edges();
  const auto lower = k.layer(dim - 1).edges();
  if (characteristic == 2) return gf2_rank(faces, lower);
  if (characteristic != 0) {
    (void)Characteristic(characteristic);  // validates primality
    return signed_rank(field::PrimeField(characteristic), faces, lower);
  }
  // Over Q: every r x r minor is at most (dim+1)^(r/2) in absolute value
  // (Hadamard), so rank mod p equals the rational rank once (dim+1)^r < p^2.
  const unsigned long r = static_cast<unsigned long>(std::min(faces.size(), lower.size()));
  mpz_class bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(dim + 1), r);
  for (unsigned bits : {31U, 61U}) {
    const mpz_class p(std::to_string(prime_below_power_of_two(bits)));
    if (bound < p * p) return signed_rank(field::PrimeField(prime_below_power_of_two(bits)), faces, lower);
  }
  return signed_rank(field::IntegerRing(), faces, lower);
}

BettiVector betti_numbers(const SimplicialComplex& k, unsigned characteristic) {
  BettiVector b;
  b.characteristic = characteristic;
  const int d = k.dimension();
  std::vector<std::size_t> ranks(static_cast<std::size_t>(std::max(d, 0)) + 2, 0);
  for (int s = 1; s <= d; ++s) ranks[static_cast<std::size_t>(s)] = boundary_rank(k, s, characteristic);
  const FVector f = f_vector(k);  // f[0] = f_{-1}
  for (int s = 0; s <= d; ++s) {
    const auto i = static_cast<std::size_t>(s);
    b.betti.push_back(f[i + 1] - ranks[i] - ranks[i + 1]);
  }
  return b;
}

BettiVector near_cone_betti(const SimplicialComplex& k, unsigned characteristic) {
  if (!is_near_cone(k)) throw PreconditionError("near_cone_betti: not a near cone");
  BettiVector b;
  b.characteristic = characteristic;
  const Subset one = element_bit(1);
  for (int s = 0; s <= k.dimension(); ++s) {
    std::uint64_t count = 0;
    for (auto f : k.layer(s).edges()) {
      if (!k.contains(f | one)) ++count;
    }
    b.betti.push_back(count);
  }
  if (!b.betti.empty()) b.betti[0] += 1;
  return b;
}

BettiVector betti_via_full_shift(const SimplicialComplex& k, const FieldContext& ctx) {
  BettiVector b;
  b.characteristic = static_cast<unsigned>(ctx.characteristic.value());
  const int d = k.dimension();
  if (d < 0) return b;
  const auto delta = shift_complex(k, Permutation::longest(k.n()), ctx);
  auto with_one = [&](int s) -> std::uint64_t {
    if (s > d) return 0;
    const auto edges = delta.layer(s).edges();
    return static_cast<std::uint64_t>(std::count_if(edges.begin(), edges.end(), [](Subset f) { return contains(f, 1); }));
  };
  const FVector f = f_vector(k);
  for (int s = 0; s <= d; ++s) {
    b.betti.push_back(f[static_cast<std::size_t>(s) + 1] - with_one(s + 1) - with_one(s));
  }
  b.betti[0] += 1;
  return b;
}

bool preserves_betti_cert(const Permutation& w, unsigned n) {
  if (w.n() != n) throw PreconditionError("preserves_betti_cert: permutation size differs from n");
  return weak_order_geq(w, Permutation::cycle(n));
}

SimplicialComplex combinatorial_shift(const SimplicialComplex& k, const Permutation& t) {
  std::vector<UniformHypergraph> layers;
  for (const auto& l : vertex_layers(k)) layers.push_back(combinatorial_shift(l, t));
  return complex_from_layers(k.n(), layers);
}

SimplicialComplex random_complex(unsigned n, unsigned max_facets, unsigned max_dim, std::mt19937_64& rng) {
  if (n == 0 || max_facets == 0) throw PreconditionError("random_complex: need n >= 1 and max_facets >= 1");
  std::uniform_int_distribution<unsigned> count(1, max_facets);
  std::uniform_int_distribution<unsigned> size(1, std::min(n, max_dim + 1));
  std::vector<Subset> faces;
  const unsigned f = count(rng);
  for (unsigned i = 0; i < f; ++i) {
    std::vector<unsigned> verts(n);
    for (unsigned v = 0; v < n; ++v) verts[v] = v + 1;
    std::shuffle(verts.begin(), verts.end(), rng);
    verts.resize(size(rng));
    faces.push_back(subset_of(verts));
  }
  return SimplicialComplex::from_faces(n, faces);
}

ScanReport conjecture_scan(const std::vector<ComplexInstance>& complexes, const std::vector<GraphInstance>& graphs,
                           const FieldContext& ctx, const ScanOptions& opts) {
  ScanReport report;
  report.characteristic = static_cast<unsigned>(ctx.characteristic.value());
  for (const auto& inst : complexes) {
    const auto& k = inst.complex;
    ComplexScanResult res;
    res.name = inst.name;
    res.betti = betti_numbers(k, report.characteristic);
    const auto perms = all_permutations(k.n());
    std::vector<SimplicialComplex> shifted(perms.size());
    std::vector<BettiVector> betti(perms.size());
    parallel_for(perms.size(), opts.parallelism, [&](std::size_t i) {
      shifted[i] = shift_complex(k, perms[i], ctx);
      betti[i] = betti_numbers(shifted[i], report.characteristic);
    });
    for (std::size_t i = 0; i < perms.size(); ++i) {
      ++res.shifts;
      const bool cert = preserves_betti_cert(perms[i], k.n());
      if (cert) ++res.certified;
      if (betti[i] == res.betti) {
        res.preserving.push_back(perms[i]);
        if (cert) ++res.certified_preserving;
      }
      if (!betti_geq(betti[i], res.betti)) {
        report.monotonicity_violations.push_back({inst.name, perms[i], res.betti, betti[i], shifted[i]});
      }
    }
    report.complexes.push_back(std::move(res));
  }
  for (const auto& inst : graphs) {
    GraphOptions gopts;
    gopts.parallelism = opts.parallelism;
    gopts.node_cap = opts.node_cap;
    const ShiftGraph g =
        inst.from ? build_psg_from(*inst.from, ctx, gopts) : build_psg(inst.n, inst.k, inst.m, ctx, gopts);
    scan_contracted(report, inst.name, contract(g, ctx));
  }
  return report;
}

void scan_contracted(ScanReport& report, const std::string& name, const ContractedShiftGraph& g) {
  GraphScanResult res;
  res.name = name;
  res.nodes = g.nodes.size();
  res.edges = g.edges.size();
  const auto ac = check_acyclic(g);
  res.acyclic = ac.acyclic;
  for (auto v : ac.cycle) res.cycle.push_back(g.nodes[v]);
  if (!res.acyclic) ++report.acyclicity_violations;
  report.graphs.push_back(std::move(res));
}

std::string scan_report_json(const ScanReport& r) {
  using nlohmann::json;
  auto faces = [](const std::vector<Subset>& fs) {
    json out = json::array();
    for (auto f : fs) out.push_back(elements(f));
    return out;
  };
  json j;
  j["char"] = r.characteristic;
  j["complexes"] = json::array();
  for (const auto& c : r.complexes) {
    json pres = json::array();
    for (const auto& w : c.preserving) pres.push_back(w.images());
    j["complexes"].push_back({{"name", c.name},
                              {"betti", c.betti.betti},
                              {"shifts", c.shifts},
                              {"certified", c.certified},
                              {"certified_preserving", c.certified_preserving},
                              {"preserving", pres}});
  }
  j["monotonicity_violations"] = json::array();
  for (const auto& v : r.monotonicity_violations) {
    j["monotonicity_violations"].push_back({{"instance", v.instance},
                                            {"w", v.w.images()},
                                            {"betti_before", v.before.betti},
                                            {"betti_after", v.after.betti},
                                            {"shifted_facets", faces(v.shifted.facets())}});
  }
  j["graphs"] = json::array();
  for (const auto& g : r.graphs) {
    json cyc = json::array();
    for (const auto& h : g.cycle) cyc.push_back(faces(h.edges()));
    j["graphs"].push_back(
        {{"name", g.name}, {"nodes", g.nodes}, {"edges", g.edges}, {"acyclic", g.acyclic}, {"cycle", cyc}});
  }
  j["acyclicity_violations"] = r.acyclicity_violations;
  return j.dump(2) + "\n";
}

}  // namespace shiftlab
