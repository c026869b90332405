#include "shiftlab/shiftgraph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <gmpxx.h>

#include "json.hpp"

#include "shiftlab/error.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/parallel.hpp"
#include "shiftlab/shift.hpp"

namespace shiftlab {

using json = nlohmann::json;

std::optional<std::size_t> ShiftGraph::find(const UniformHypergraph& h) const {
  auto it = std::lower_bound(nodes.begin(), nodes.end(), h, HypergraphLess{});
  if (it == nodes.end() || !(*it == h)) return std::nullopt;
  return static_cast<std::size_t>(it - nodes.begin());
}

namespace {

// r(w) for every w != e, in lex order of one-line notation.
struct PermutationTable {
  std::vector<Permutation> perms;
  std::vector<GenericMatrix> matrices;

  explicit PermutationTable(unsigned n) {
    for (auto& w : all_permutations(n)) {
      if (w.length() == 0) continue;  // r(e) = 1 fixes everything
      matrices.push_back(build_r(w));
      perms.push_back(std::move(w));
    }
  }
};

// targets[j] = Delta_{r(perms[j])}(s)
std::vector<UniformHypergraph> shifts_of(const UniformHypergraph& s, const PermutationTable& table,
                                         const FieldContext& ctx) {
  std::vector<UniformHypergraph> out;
  out.reserve(table.perms.size());
  for (const auto& g : table.matrices) out.push_back(delta_shift(g, s, ctx));
  return out;
}

ShiftGraph assemble(unsigned n, unsigned k, std::size_t m, std::vector<UniformHypergraph> nodes,
                    const std::vector<std::vector<UniformHypergraph>>& targets, const PermutationTable& table) {
  // targets are indexed like the unsorted input nodes
  std::vector<std::size_t> order(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return hypergraph_lex_less(nodes[a], nodes[b]); });
  ShiftGraph g;
  g.n = n;
  g.k = k;
  g.m = m;
  for (auto i : order) g.nodes.push_back(nodes[i]);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const auto& row = targets[order[pos]];
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] == g.nodes[pos]) continue;
      const auto dst = g.find(row[j]);
      if (!dst) throw InternalError("shift graph: target " + row[j].to_string() + " is not a node");
      g.edges[{pos, *dst}].push_back(table.perms[j]);
    }
  }
  // witnesses were pushed in table order, which is already one-line lex order
  return g;
}

}  // namespace

ShiftGraph build_psg(unsigned n, unsigned k, std::size_t m, const FieldContext& ctx, const GraphOptions& opts) {
  if (k > n) throw PreconditionError("build_psg: k > n");
  const auto columns = all_subsets(n, k);
  if (m > columns.size()) {
    throw PreconditionError("build_psg: m = " + std::to_string(m) + " exceeds C(n,k) = " +
                            std::to_string(columns.size()));
  }
  mpz_class count;
  mpz_bin_uiui(count.get_mpz_t(), columns.size(), m);
  if (count > mpz_class(std::to_string(opts.node_cap))) {
    throw PreconditionError("build_psg: PSG(" + std::to_string(n) + "," + std::to_string(k) + "," +
                            std::to_string(m) + ") has " + count.get_str() + " nodes, above the cap of " +
                            std::to_string(opts.node_cap) + "; use build_psg_from to explore from one hypergraph");
  }
  std::vector<UniformHypergraph> nodes;
  std::vector<std::size_t> pick(m);
  for (std::size_t i = 0; i < m; ++i) pick[i] = i;
  for (;;) {
    std::vector<Subset> edges;
    for (auto i : pick) edges.push_back(columns[i]);
    nodes.emplace_back(n, k, std::move(edges));
    // next m-combination of column indices (lex)
    std::size_t i = m;
    while (i > 0 && pick[i - 1] == columns.size() - m + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  const PermutationTable table(n);
  std::vector<std::vector<UniformHypergraph>> targets(nodes.size());
  parallel_for(nodes.size(), opts.parallelism, [&](std::size_t i) { targets[i] = shifts_of(nodes[i], table, ctx); });
  return assemble(n, k, m, std::move(nodes), targets, table);
}

ShiftGraph build_psg_from(const UniformHypergraph& s, const FieldContext& ctx, const GraphOptions& opts) {
  const PermutationTable table(s.n());
  std::vector<UniformHypergraph> nodes{s};
  std::vector<std::vector<UniformHypergraph>> targets;
  std::set<UniformHypergraph, HypergraphLess> seen{s};
  // Level-synchronous BFS: each frontier is shifted as one parallel batch.
  std::size_t begin = 0;
  while (begin < nodes.size()) {
    const std::size_t end = nodes.size();
    if (end > opts.node_cap) {
      throw PreconditionError("build_psg_from: more than " + std::to_string(opts.node_cap) + " reachable nodes");
    }
    targets.resize(end);
    parallel_for(end - begin, opts.parallelism,
                 [&](std::size_t i) { targets[begin + i] = shifts_of(nodes[begin + i], table, ctx); });
    for (std::size_t i = begin; i < end; ++i) {
      for (const auto& t : targets[i]) {
        if (seen.insert(t).second) nodes.push_back(t);
      }
    }
    begin = end;
  }
  return assemble(s.n(), s.k(), s.size(), std::move(nodes), targets, table);
}

ContractedShiftGraph contract(const ShiftGraph& g, const FieldContext& ctx) {
  std::vector<UniformHypergraph> full;
  full.reserve(g.nodes.size());
  for (const auto& s : g.nodes) full.push_back(full_shift(s, ctx));
  ContractedShiftGraph c;
  c.nodes = full;
  std::sort(c.nodes.begin(), c.nodes.end(), HypergraphLess{});
  c.nodes.erase(std::unique(c.nodes.begin(), c.nodes.end()), c.nodes.end());
  auto index = [&](const UniformHypergraph& h) {
    return static_cast<std::size_t>(std::lower_bound(c.nodes.begin(), c.nodes.end(), h, HypergraphLess{}) -
                                    c.nodes.begin());
  };
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [e, _] : g.edges) {
    const auto a = index(full[e.first]);
    const auto b = index(full[e.second]);
    if (a != b) edges.insert({a, b});
  }
  c.edges.assign(edges.begin(), edges.end());
  return c;
}

std::vector<std::size_t> sinks(const ShiftGraph& g) {
  std::vector<bool> has_out(g.nodes.size(), false);
  for (const auto& [e, _] : g.edges) has_out[e.first] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (!has_out[i]) out.push_back(i);
  }
  return out;
}

AcyclicityReport check_acyclic(std::size_t node_count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> adj(node_count);
  std::vector<std::size_t> indegree(node_count, 0);
  for (auto [a, b] : edges) {
    if (a >= node_count || b >= node_count) throw PreconditionError("check_acyclic: edge endpoint out of range");
    adj[a].push_back(b);
    ++indegree[b];
  }
  AcyclicityReport r;
  // Kahn with a min-heap on node index, so the order is deterministic.
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < node_count; ++i) {
    if (indegree[i] == 0) ready.insert(i);
  }
  while (!ready.empty()) {
    const auto v = *ready.begin();
    ready.erase(ready.begin());
    r.order.push_back(v);
    for (auto u : adj[v]) {
      if (--indegree[u] == 0) ready.insert(u);
    }
  }
  if (r.order.size() == node_count) return r;
  r.acyclic = false;
  r.order.clear();
  // Every remaining node has a remaining predecessor; walk backwards until a repeat.
  std::vector<std::vector<std::size_t>> pred(node_count);
  for (auto [a, b] : edges) {
    if (indegree[a] > 0 && indegree[b] > 0) pred[b].push_back(a);
  }
  std::size_t v = 0;
  while (indegree[v] == 0) ++v;
  std::vector<std::size_t> pos(node_count, node_count);
  std::vector<std::size_t> walk;
  while (pos[v] == node_count) {
    pos[v] = walk.size();
    walk.push_back(v);
    v = *std::min_element(pred[v].begin(), pred[v].end());
  }
  // walk[pos[v]..] is a cycle traversed against the edges
  r.cycle.assign(walk.begin() + static_cast<std::ptrdiff_t>(pos[v]), walk.end());
  std::reverse(r.cycle.begin(), r.cycle.end());
  r.cycle.push_back(r.cycle.front());
  return r;
}

AcyclicityReport check_acyclic(const ShiftGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [e, _] : g.edges) edges.push_back(e);
  return check_acyclic(g.nodes.size(), edges);
}

AcyclicityReport check_acyclic(const ContractedShiftGraph& g) { return check_acyclic(g.nodes.size(), g.edges); }

bool certify_acyclic(ShiftGraph& g) {
  auto r = check_acyclic(g);
  if (r.acyclic) g.acyclicity_certificate = std::move(r.order);
  return r.acyclic;
}

namespace {

std::string node_label(const UniformHypergraph& h) {
  std::string out;
  for (auto e : h.edges()) {
    if (!out.empty()) out += ' ';
    out += subset_to_string(e, h.n());
  }
  return out;
}

json edges_json(const UniformHypergraph& h) {
  json out = json::array();
  for (auto e : h.edges()) out.push_back(elements(e));
  return out;
}

}  // namespace

std::string export_dot(const ShiftGraph& g) {
  std::ostringstream os;
  os << "digraph PSG {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << node_label(g.nodes[i]) << "\"];\n";
  }
  for (const auto& [e, w] : g.edges) {
    os << "  n" << e.first << " -> n" << e.second << " [label=\"" << w.size() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string export_json(const ShiftGraph& g) {
  json j;
  j["n"] = g.n;
  j["k"] = g.k;
  j["m"] = g.m;
  j["nodes"] = json::array();
  for (const auto& h : g.nodes) j["nodes"].push_back(edges_json(h));
  j["edges"] = json::array();
  for (const auto& [e, ws] : g.edges) {
    json wj = json::array();
    for (const auto& w : ws) wj.push_back(w.images());
    j["edges"].push_back({{"src", e.first}, {"dst", e.second}, {"witnesses", wj}});
  }
  return j.dump() + "\n";
}

ShiftGraph parse_shift_graph_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    ShiftGraph g;
    g.n = j.at("n").get<unsigned>();
    g.k = j.at("k").get<unsigned>();
    g.m = j.at("m").get<std::size_t>();
    for (const auto& node : j.at("nodes")) {
      std::vector<Subset> edges;
      for (const auto& e : node) edges.push_back(subset_of(e.get<std::vector<unsigned>>()));
      UniformHypergraph h(g.n, g.k, std::move(edges));
      if (h.size() != g.m) throw ParseError("shift graph JSON: node with " + std::to_string(h.size()) + " edges");
      if (!g.nodes.empty() && !hypergraph_lex_less(g.nodes.back(), h)) {
        throw ParseError("shift graph JSON: nodes are not strictly lex increasing");
      }
      g.nodes.push_back(std::move(h));
    }
    for (const auto& e : j.at("edges")) {
      const auto src = e.at("src").get<std::size_t>();
      const auto dst = e.at("dst").get<std::size_t>();
      if (src >= g.nodes.size() || dst >= g.nodes.size() || src == dst) {
        throw ParseError("shift graph JSON: bad edge " + std::to_string(src) + " -> " + std::to_string(dst));
      }
      auto& ws = g.edges[{src, dst}];
      if (!ws.empty()) throw ParseError("shift graph JSON: duplicate edge");
      for (const auto& w : e.at("witnesses")) ws.emplace_back(w.get<std::vector<unsigned>>());
      if (ws.empty()) throw ParseError("shift graph JSON: edge without witnesses");
      std::sort(ws.begin(), ws.end());
    }
    return g;
  } catch (const json::exception& e) {
    throw ParseError(std::string("shift graph JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(std::string("shift graph JSON: ") + e.what());
  }
}

std::string export_dot(const ContractedShiftGraph& g) {
  std::ostringstream os;
  os << "digraph ContractedPSG {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    os << "  n" << i << " [label=\"" << node_label(g.nodes[i]) << "\"];\n";
  }
  for (auto [a, b] : g.edges) os << "  n" << a << " -> n" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string export_json(const ContractedShiftGraph& g) {
  json j;
  j["contracted"] = true;
  j["nodes"] = json::array();
  for (const auto& h : g.nodes) j["nodes"].push_back(edges_json(h));
  j["edges"] = json::array();
  for (auto [a, b] : g.edges) j["edges"].push_back({{"src", a}, {"dst", b}});
  return j.dump() + "\n";
}

}  // namespace shiftlab
