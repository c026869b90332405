#include "shiftlab/reproduce.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "shiftlab/compound.hpp"
#include "shiftlab/error.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/shiftgraph.hpp"
#include "shiftlab/topology.hpp"

namespace shiftlab {

namespace {

// ---- embedded golden data ----

const char* const kPsg425 =
#include "golden_psg_4_2_5.inc"
    ;

constexpr const char* kRp26 = "125 126 134 135 146 234 236 245 356 456";

struct TableRow {
  const char* label;
  const char* perm;
  const char* facets;
  std::vector<std::uint64_t> betti;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {"A", "w0", "123 124 125 126 134 135 136 145 146 156", {1, 0, 0}},
      {"B", "w0s1", "123 124 125 126 134 135 136 145 146 234 56", {1, 1, 1}},
      {"C", "w0s4s3s2s1", "123 124 125 126 134 135 136 234 235 236 45 46 56", {1, 3, 3}},
      {"D", "w0s4s2s3s2s1", "123 124 125 126 134 135 145 234 235 245 36 46 56", {1, 3, 3}},
  };
  return rows;
}

constexpr const char* kCycleShiftGf2 = "123 124 125 126 134 135 136 146 156 236 45";

std::vector<Subset> faces_of(const char* text) {
  std::vector<Subset> out;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    Subset s = 0;
    for (char c : tok) s |= element_bit(static_cast<unsigned>(c - '0'));
    out.push_back(s);
  }
  return out;
}

SimplicialComplex complex_of(const char* text) { return SimplicialComplex::from_faces(6, faces_of(text)); }

UniformHypergraph hypergraph_of(unsigned n, unsigned k, const char* text) {
  return UniformHypergraph(n, k, faces_of(text));
}

// ---- reporting ----

class Checker {
 public:
  explicit Checker(std::ostream& out) : out_(out) {}
  void check(bool ok, const std::string& what, const std::string& detail = {}) {
    out_ << (ok ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) out_ << ": " << detail;
    out_ << '\n';
    all_ = all_ && ok;
  }
  bool all() const { return all_; }

 private:
  std::ostream& out_;
  bool all_ = true;
};

FieldContext context(std::uint64_t characteristic, const ReproduceOptions& o) {
  FieldContext ctx = make_field_context(characteristic, o.backend, o.seed, o.epsilon);
  return ctx;
}

FieldContext context(std::uint64_t characteristic, Backend b, const ReproduceOptions& o) {
  return make_field_context(characteristic, b, o.seed, o.epsilon);
}

// ---- targets ----

bool two_edge_graph(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const auto s = hypergraph_of(4, 2, "12 23");
  const auto expected = hypergraph_of(4, 2, "12 13");
  const PolyRing ring(2);
  const auto x = build_X(4);
  const auto row = compound_row(ring, x.entries(), subset_of({1, 2}), all_subsets(4, 2));
  const auto entry = row[lex_rank(subset_of({2, 3}), 4)];
  c.check(entry == ring.parse("x12*x23 + x13*x22"), "compound entry (12, 23) of X over GF(2)", entry.to_string());
  const auto via_x = delta_shift(x, s, context(2, Backend::Symbolic, o));
  const auto sym = partial_shift(s, Permutation::longest(4), context(2, Backend::Symbolic, o));
  const auto rnd = partial_shift(s, Permutation::longest(4), context(2, Backend::Randomized, o));
  c.check(via_x == expected, "Delta_X({12,23}), symbolic", via_x.to_string());
  c.check(sym == expected, "Delta_r(w0)({12,23}), symbolic", sym.to_string());
  c.check(rnd == expected, "Delta_r(w0)({12,23}), randomized", rnd.to_string());
  return c.all();
}

bool unipotent_longest(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const PolyRing ring;
  const auto uw0 = multiply(build_U(4), permutation_matrix(Permutation::longest(4)), ring);
  c.check(uw0 == build_r(Permutation::longest(4)), "U w0 equals r(w0)");
  for (unsigned p : {2U, 0U}) {
    const auto ctx = context(p, o);
    std::size_t agree = 0, total = 0;
    for (unsigned k = 1; k <= 3; ++k) {
      const auto cols = all_subsets(4, k);
      for (std::size_t m = 1; m <= 2 && m <= cols.size(); ++m) {
        std::vector<std::size_t> pick(m);
        for (std::size_t i = 0; i < m; ++i) pick[i] = i;
        for (;;) {
          std::vector<Subset> edges;
          for (auto i : pick) edges.push_back(cols[i]);
          const UniformHypergraph s(4, k, edges);
          ++total;
          if (delta_shift(uw0, s, ctx) == delta_shift(build_X(4), s, ctx)) ++agree;
          std::size_t i = m;
          while (i > 0 && pick[i - 1] == cols.size() - m + i - 1) --i;
          if (i == 0) break;
          ++pick[i - 1];
          for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
      }
    }
    c.check(agree == total, "Delta_{U w0} = Delta_X, n = 4, m <= 2, char " + std::to_string(p),
            std::to_string(agree) + "/" + std::to_string(total));
  }
  return c.all();
}

bool vandermonde(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const auto ctx = context(0, o);
  const auto s = hypergraph_of(6, 3, "123 145 246 356");
  const auto full = full_shift(s, ctx);
  c.check(full == hypergraph_of(6, 3, "123 124 125 126"), "full shift", full.to_string());
  // The Vandermonde matrix is only practical with the randomized backend.
  const auto vctx = context(0, Backend::Randomized, o);
  const auto dm = delta_shift(build_vandermonde(6), s, vctx);
  c.check(dm == hypergraph_of(6, 3, "123 124 125 134"), "Delta_M", dm.to_string());
  std::size_t hits = 0;
  for (const auto& w : all_permutations(6)) {
    if (partial_shift(s, w, vctx) == dm) ++hits;
  }
  c.check(hits == 0, "Delta_M is not a partial shift", std::to_string(hits) + " of 720 permutations hit it");
  return c.all();
}

bool simple_transpositions(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  for (unsigned p : {0U, 2U}) {
    const auto ctx = context(p, o);
    std::size_t agree = 0, total = 0;
    for (unsigned k = 1; k <= 3; ++k) {
      const auto cols = all_subsets(4, k);
      // every hypergraph with at most 3 edges
      for (Subset mask = 1; mask < (Subset{1} << cols.size()); ++mask) {
        if (subset_size(mask) > 3) continue;
        std::vector<Subset> edges;
        for (unsigned i = 0; i < cols.size(); ++i) {
          if ((mask >> i) & 1U) edges.push_back(cols[i]);
        }
        const UniformHypergraph s(4, k, edges);
        for (unsigned i = 1; i < 4; ++i) {
          const auto t = Permutation::simple(4, i);
          const auto gamma = combinatorial_shift(s, t);
          ++total;
          if (gamma == delta_shift(build_gamma(t), s, ctx) && gamma == partial_shift(s, t, ctx)) ++agree;
        }
      }
    }
    c.check(agree == total, "Gamma_si = Delta_gamma(si) = Delta_r(si), n = 4, m <= 3, char " + std::to_string(p),
            std::to_string(agree) + "/" + std::to_string(total));
  }
  return c.all();
}

bool psg_4_2_5(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  GraphOptions gopts;
  gopts.parallelism = o.parallelism;
  auto g = build_psg(4, 2, 5, context(0, o), gopts);
  c.check(g.nodes.size() == 6, "6 nodes", std::to_string(g.nodes.size()));
  c.check(certify_acyclic(g), "acyclic");
  const auto sk = sinks(g);
  c.check(sk.size() == 1 && is_shifted(g.nodes[sk.front()]) && sk.front() == 0,
          "exactly one sink, the lex-minimal shifted node",
          sk.empty() ? "none" : g.nodes[sk.front()].to_string());
  bool identity = false;
  for (const auto& [e, ws] : g.edges) {
    for (const auto& w : ws) identity = identity || w.length() == 0;
  }
  c.check(!identity, "identity is never a witness");
  const auto golden = parse_shift_graph_json(kPsg425);
  c.check(g == golden, "nodes, edges and witness sets match the golden graph",
          std::to_string(g.edges.size()) + " edges");
  return c.all();
}

std::map<std::string, SimplicialComplex> table_complexes() {
  std::map<std::string, SimplicialComplex> out;
  for (const auto& r : table_rows()) out.emplace(r.label, complex_of(r.facets));
  return out;
}

bool rp26_table(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const auto k = complex_of(kRp26);
  const auto q = context(0, o);
  const auto gf2 = context(2, o);
  c.check(betti_numbers(k, 0) == BettiVector{0, {1, 0, 0}}, "Betti of RP2_6 over Q", betti_numbers(k, 0).to_string());
  c.check(betti_numbers(k, 2) == BettiVector{2, {1, 1, 1}}, "Betti of RP2_6 over GF(2)",
          betti_numbers(k, 2).to_string());
  const auto golden = table_complexes();
  for (const auto& r : table_rows()) {
    const auto shifted = shift_complex(k, parse_permutation(r.perm, 6), q);
    c.check(shifted == golden.at(r.label), std::string(r.label) + " = Delta_r(" + r.perm + ") over Q",
            shifted.to_string());
    const auto b0 = betti_numbers(shifted, 0);
    const auto b2 = betti_numbers(shifted, 2);
    const BettiVector expected{0, r.betti};
    c.check(b0 == expected && b2 == expected, std::string("Betti of ") + r.label + " over Q and GF(2)",
            b0.to_string() + " " + b2.to_string());
  }
  const auto b = shift_complex(k, Permutation::longest(6), gf2);
  c.check(b == golden.at("B"), "Delta over GF(2) = B", b.to_string());
  return c.all();
}

std::string label_of(const UniformHypergraph& h, const std::map<std::string, SimplicialComplex>& golden) {
  for (const auto& [name, k] : golden) {
    if (k.layer(2) == h) return name;
  }
  return h.to_string();
}

bool rp26_contracted(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const auto top = complex_of(kRp26).layer(2);
  const auto golden = table_complexes();
  GraphOptions gopts;
  gopts.parallelism = o.parallelism;
  const std::map<unsigned, std::pair<std::string, std::string>> expected = {
      {0, {"A B C D", "A->B A->C A->D B->C B->D"}},
      {2, {"B C D", "B->C B->D"}},
  };
  for (const auto& [p, exp] : expected) {
    const auto ctx = context(p, o);
    const auto g = build_psg_from(top, ctx, gopts);
    const auto cg = contract(g, ctx);
    std::vector<std::string> nodes;
    for (const auto& h : cg.nodes) nodes.push_back(label_of(h, golden));
    std::vector<std::string> edges;
    for (auto [a, b] : cg.edges) edges.push_back(nodes[a] + "->" + nodes[b]);
    std::sort(nodes.begin(), nodes.end());
    std::sort(edges.begin(), edges.end());
    std::string ns, es;
    for (const auto& s : nodes) ns += (ns.empty() ? "" : " ") + s;
    for (const auto& s : edges) es += (es.empty() ? "" : " ") + s;
    const std::string field = p == 0 ? "Q" : "GF(2)";
    c.check(ns == exp.first, "contracted nodes over " + field, ns + " (" + std::to_string(g.nodes.size()) + " reachable)");
    c.check(es == exp.second, "contracted edges over " + field, es);
    c.check(check_acyclic(cg).acyclic, "contracted graph over " + field + " is acyclic");
  }
  return c.all();
}

bool rp26_cycle(const ReproduceOptions& o, std::ostream& out) {
  Checker c(out);
  const auto k = complex_of(kRp26);
  ScanOptions sopts;
  sopts.parallelism = o.parallelism;
  const auto report = conjecture_scan({{"RP2_6", k}}, {}, context(0, o), sopts);
  const auto& r = report.complexes.front();
  std::size_t uncertified_preserving = 0;
  bool identity_preserves = false;
  for (const auto& w : r.preserving) {
    if (!preserves_betti_cert(w, 6)) {
      ++uncertified_preserving;
      identity_preserves = identity_preserves || w.length() == 0;
    }
  }
  c.check(r.certified == 120, "permutations above the 6-cycle", std::to_string(r.certified));
  c.check(r.certified_preserving == 120, "certified permutations preserving Betti over Q",
          std::to_string(r.certified_preserving));
  c.check(uncertified_preserving == 1 && identity_preserves, "of the other 600 only the identity preserves Betti",
          std::to_string(uncertified_preserving));
  c.check(report.monotonicity_violations.empty(), "no Betti decrease",
          std::to_string(report.monotonicity_violations.size()) + " violations");
  const auto t = shift_complex(k, Permutation::cycle(6), context(2, o));
  c.check(betti_numbers(t, 2) == BettiVector{2, {1, 1, 1}}, "Delta_r(c6) over GF(2) has Betti (1,1,1)",
          betti_numbers(t, 2).to_string());
  c.check(!is_shifted(t), "Delta_r(c6) over GF(2) is not shifted");
  c.check(t == complex_of(kCycleShiftGf2), "Delta_r(c6) over GF(2) facets", t.to_string());
  return c.all();
}

using Runner = bool (*)(const ReproduceOptions&, std::ostream&);

const std::vector<std::pair<ReproduceTarget, Runner>>& registry() {
  static const std::vector<std::pair<ReproduceTarget, Runner>> r = {
      {{"two-edge-graph", {"example-2.2"}, "full shift of {12,23} over GF(2) via X and r(w0)"}, two_edge_graph},
      {{"unipotent-longest", {"example-3.6"}, "Delta_{U w0} = Delta_X on small hypergraphs"}, unipotent_longest},
      {{"vandermonde", {"example-3.19"}, "Vandermonde shift of {123,145,246,356} is not a partial shift"},
       vandermonde},
      {{"simple-transpositions", {"prop-4.3"}, "combinatorial = partial shift for simple transpositions, n = 4"},
       simple_transpositions},
      {{"psg-4-2-5", {"fig1"}, "partial shift graph PSG(4,2,5)"}, psg_4_2_5},
      {{"rp26-table", {"table2"}, "layer-wise partial shifts of RP2_6 and their Betti numbers"}, rp26_table},
      {{"rp26-contracted", {"fig2"}, "contracted partial shift graphs of RP2_6 over Q and GF(2)"}, rp26_contracted},
      {{"rp26-cycle", {"example-6.8", "example-tight"}, "Betti preservation above the 6-cycle for RP2_6"},
       rp26_cycle},
  };
  return r;
}

}  // namespace

const std::vector<ReproduceTarget>& reproduce_targets() {
  static const std::vector<ReproduceTarget> out = [] {
    std::vector<ReproduceTarget> v;
    for (const auto& [t, _] : registry()) v.push_back(t);
    return v;
  }();
  return out;
}

std::optional<std::string> resolve_target(const std::string& name) {
  for (const auto& t : reproduce_targets()) {
    if (t.name == name || std::find(t.aliases.begin(), t.aliases.end(), name) != t.aliases.end()) return t.name;
  }
  return std::nullopt;
}

bool run_reproduce(const std::string& name, const ReproduceOptions& opts, std::ostream& out) {
  const auto canonical = resolve_target(name);
  if (!canonical) throw PreconditionError("unknown reproduce target '" + name + "'");
  for (const auto& [t, run] : registry()) {
    if (t.name == *canonical) return run(opts, out);
  }
  throw InternalError("reproduce registry out of sync");
}

}  // namespace shiftlab
