// shiftlab: command-line front end.
//
// exit codes: 0 ok, 1 reproduction mismatch, 2 parse error,
//             3 precondition failure, 4 internal error

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "shiftlab/error.hpp"
#include "shiftlab/field_context.hpp"
#include "shiftlab/generic_matrix.hpp"
#include "shiftlab/io.hpp"
#include "shiftlab/multipoly.hpp"
#include "shiftlab/reproduce.hpp"
#include "shiftlab/shift.hpp"
#include "shiftlab/shiftgraph.hpp"
#include "shiftlab/topology.hpp"

using namespace shiftlab;

namespace {

struct RunConfig {
  std::uint64_t characteristic = 0;
  std::string backend = "randomized";
  std::uint64_t seed = 0;
  std::string epsilon = "2^-30";
  std::string format = "json";
  std::string output;
  unsigned parallelism = 1;
  bool double_prime = false;
};

FieldContext make_context(const RunConfig& cfg) {
  FieldContext ctx = make_field_context(cfg.characteristic, parse_backend(cfg.backend), cfg.seed,
                                        parse_epsilon(cfg.epsilon));
  ctx.double_prime = cfg.double_prime;
  return ctx;
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(cfg.output, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + cfg.output);
  out << text;
}

bool is_complex_text(const std::string& text) { return text.find("\"facets\"") != std::string::npos; }

// Named matrices: X, U, identity, vandermonde, each optionally followed by n
// ("vandermonde6"); r:<perm>, gamma:<transposition>; otherwise a JSON file
// {"entries":[["x11","1"],["1","0"]]}.
GenericMatrix resolve_matrix(const std::string& spec, unsigned n) {
  auto named = [&](const std::string& base) -> std::optional<unsigned> {
    if (spec.rfind(base, 0) != 0) return std::nullopt;
    const auto rest = spec.substr(base.size());
    if (rest.empty()) return n;
    if (rest.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
    return static_cast<unsigned>(std::stoul(rest));
  };
  auto sized = [&](unsigned m) {
    if (m != n) throw PreconditionError("matrix " + spec + " has size " + std::to_string(m) + " but n = " + std::to_string(n));
    return m;
  };
  if (spec.rfind("r:", 0) == 0) return build_r(parse_permutation(spec.substr(2), n));
  if (spec.rfind("gamma:", 0) == 0) return build_gamma(parse_permutation(spec.substr(6), n));
  if (auto m = named("vandermonde")) return build_vandermonde(sized(*m));
  if (auto m = named("identity")) return identity_generic(sized(*m));
  if (auto m = named("X")) return build_X(sized(*m));
  if (auto m = named("U")) return build_U(sized(*m));
  const auto j = [&] {
    try {
      return nlohmann::json::parse(io::read_file(spec));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("matrix file " + spec + ": " + e.what());
    }
  }();
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("matrix file needs \"entries\"");
  const auto& rows = j["entries"];
  const PolyRing ring;
  Matrix<MultiPoly> m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size()) throw ParseError("matrix file: rows must form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      const auto& e = rows[i][c];
      m(i, c) = ring.parse(e.is_string() ? e.get<std::string>() : e.dump());
    }
  }
  GenericMatrix g(std::move(m));
  sized(g.n());
  return g;
}

int cmd_shift(const RunConfig& cfg, const std::string& input, const std::string& perm, const std::string& matrix,
              bool force_complex, std::optional<unsigned> n) {
  if (perm.empty() == matrix.empty()) throw ParseError("shift needs exactly one of --perm and --matrix");
  const auto text = io::read_file(input);
  const auto ctx = make_context(cfg);
  if (force_complex || is_complex_text(text)) {
    const auto k = io::parse_complex(text, n);
    const auto out = matrix.empty() ? shift_complex(k, parse_permutation(perm, k.n()), ctx)
                                    : shift_complex(k, resolve_matrix(matrix, k.n()), ctx);
    emit(cfg, cfg.format == "text" ? io::complex_text(out) : io::complex_json(out));
  } else {
    const auto s = io::parse_hypergraph(text, n);
    const auto out = matrix.empty() ? partial_shift(s, parse_permutation(perm, s.n()), ctx)
                                    : delta_shift(resolve_matrix(matrix, s.n()), s, ctx);
    emit(cfg, cfg.format == "text" ? io::hypergraph_text(out) : io::hypergraph_json(out));
  }
  return 0;
}

std::string graph_text(const ShiftGraph& g) {
  std::ostringstream os;
  os << "PSG nodes " << g.nodes.size() << ", edges " << g.edges.size() << "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) os << i << ": " << g.nodes[i].to_string() << "\n";
  for (const auto& [e, ws] : g.edges) {
    os << e.first << " -> " << e.second << " :";
    for (const auto& w : ws) os << " [" << w.to_string() << "]";
    os << "\n";
  }
  const auto ac = check_acyclic(g);
  os << (ac.acyclic ? "acyclic" : "CYCLE FOUND") << "; sinks:";
  for (auto s : sinks(g)) os << " " << s;
  os << "\n";
  return os.str();
}

std::string contracted_text(const ContractedShiftGraph& g) {
  std::ostringstream os;
  os << "contracted nodes " << g.nodes.size() << ", edges " << g.edges.size() << "\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) os << i << ": " << g.nodes[i].to_string() << "\n";
  for (auto [a, b] : g.edges) os << a << " -> " << b << "\n";
  os << (check_acyclic(g).acyclic ? "acyclic" : "CYCLE FOUND") << "\n";
  return os.str();
}

int cmd_psg(const RunConfig& cfg, unsigned n, unsigned k, std::size_t m, const std::string& from, bool contracted,
            std::uint64_t cap) {
  const auto ctx = make_context(cfg);
  GraphOptions opts;
  opts.parallelism = cfg.parallelism;
  opts.node_cap = cap;
  ShiftGraph g;
  if (!from.empty()) {
    g = build_psg_from(io::parse_hypergraph(io::read_file(from)), ctx, opts);
  } else {
    if (n == 0) throw ParseError("psg needs -n, -k, -m or --from");
    g = build_psg(n, k, m, ctx, opts);
  }
  if (contracted) {
    const auto c = contract(g, ctx);
    emit(cfg, cfg.format == "dot" ? export_dot(c) : cfg.format == "text" ? contracted_text(c) : export_json(c));
  } else {
    emit(cfg, cfg.format == "dot" ? export_dot(g) : cfg.format == "text" ? graph_text(g) : export_json(g));
  }
  return 0;
}

int cmd_betti(const RunConfig& cfg, const std::string& input, const std::string& method) {
  const auto k = io::parse_complex(io::read_file(input));
  const auto p = static_cast<unsigned>(make_context(cfg).characteristic.value());
  BettiVector b;
  if (method == "rank") {
    b = betti_numbers(k, p);
  } else if (method == "near-cone") {
    b = near_cone_betti(k, p);
  } else if (method == "full-shift") {
    b = betti_via_full_shift(k, make_context(cfg));
  } else {
    throw ParseError("unknown method " + method);
  }
  emit(cfg, cfg.format == "text" ? b.to_string() + "\n" : io::betti_json(b));
  return 0;
}

int cmd_scan(const RunConfig& cfg, const std::vector<std::string>& inputs, unsigned random_count, unsigned random_n,
             const std::vector<std::string>& psg_specs, const std::vector<std::string>& from_files) {
  std::vector<ComplexInstance> complexes;
  for (const auto& f : inputs) complexes.push_back({f, io::parse_complex(io::read_file(f))});
  std::mt19937_64 rng(cfg.seed);
  for (unsigned i = 0; i < random_count; ++i) {
    complexes.push_back({"random-" + std::to_string(i), random_complex(random_n, 6, 2, rng)});
  }
  std::vector<GraphInstance> graphs;
  for (const auto& spec : psg_specs) {
    GraphInstance g;
    char c1 = 0, c2 = 0;
    std::istringstream in(spec);
    if (!(in >> g.n >> c1 >> g.k >> c2 >> g.m) || c1 != ',' || c2 != ',') throw ParseError("--psg expects n,k,m");
    g.name = "PSG(" + spec + ")";
    graphs.push_back(g);
  }
  for (const auto& f : from_files) {
    GraphInstance g;
    g.name = f;
    g.from = io::parse_hypergraph(io::read_file(f));
    graphs.push_back(g);
  }
  ScanOptions opts;
  opts.parallelism = cfg.parallelism;
  const auto report = conjecture_scan(complexes, graphs, make_context(cfg), opts);
  emit(cfg, scan_report_json(report));
  return 0;
}

int cmd_reproduce(const RunConfig& cfg, std::vector<std::string> names, bool list) {
  if (list || names.empty()) {
    for (const auto& t : reproduce_targets()) {
      std::cout << t.name;
      for (const auto& a : t.aliases) std::cout << " | " << a;
      std::cout << "\n    " << t.description << "\n";
    }
    return 0;
  }
  if (names.size() == 1 && names[0] == "all") {
    names.clear();
    for (const auto& t : reproduce_targets()) names.push_back(t.name);
  }
  for (const auto& name : names) {
    if (!resolve_target(name)) {
      std::cerr << "unknown target '" << name << "'; available:";
      for (const auto& t : reproduce_targets()) std::cerr << " " << t.name;
      std::cerr << "\n";
      return 2;
    }
  }
  ReproduceOptions opts;
  opts.backend = parse_backend(cfg.backend);
  opts.seed = cfg.seed;
  opts.epsilon = parse_epsilon(cfg.epsilon);
  opts.parallelism = cfg.parallelism;
  bool ok = true;
  for (const auto& name : names) {
    std::cout << "== " << *resolve_target(name) << "\n";
    const bool pass = run_reproduce(name, opts, std::cout);
    std::cout << (pass ? "PASS " : "FAIL ") << *resolve_target(name) << "\n";
    ok = ok && pass;
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftlab: exterior algebraic shifting, partial shifts and shift graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--char", cfg.characteristic, "field characteristic (0 or a prime)");
  app.add_option("--backend", cfg.backend, "symbolic or randomized")->check(CLI::IsMember({"symbolic", "randomized"}));
  app.add_option("--seed", cfg.seed, "random seed (SHIFTLAB_SEED overrides)");
  app.add_option("--epsilon", cfg.epsilon, "failure probability bound per call, e.g. 2^-30 or 1e-12");
  app.add_option("--format", cfg.format, "json, dot or text")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("-o,--output", cfg.output, "write to a file instead of stdout");
  app.add_option("--parallelism", cfg.parallelism, "worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--double-prime", cfg.double_prime, "char 0: rank modulo two large primes with exact fallback");

  auto* shift = app.add_subcommand("shift", "shift a hypergraph or a complex");
  std::string input, perm, matrix;
  bool force_complex = false;
  std::optional<unsigned> n_override;
  shift->add_option("input,--input", input, "hypergraph or complex file")->required();
  shift->add_option("--perm", perm, "w0, cN, e, a word like s1s2 or one-line notation 2,3,1");
  shift->add_option("--matrix", matrix, "X, U, identity, vandermonde[N], r:<perm>, gamma:<perm> or a JSON file");
  shift->add_flag("--complex", force_complex, "treat text input as a simplicial complex");
  shift->add_option("--n", n_override, "number of vertices (default: largest vertex)");

  auto* psg = app.add_subcommand("psg", "partial shift graph");
  unsigned pn = 0, pk = 0;
  std::size_t pm = 0;
  std::string from;
  bool contracted = false;
  std::uint64_t cap = 200000;
  psg->add_option("-n", pn, "vertices");
  psg->add_option("-k", pk, "edge size");
  psg->add_option("-m", pm, "edge count");
  psg->add_option("--from", from, "explore from this hypergraph only");
  psg->add_flag("--contract", contracted, "quotient by equal full shifts");
  psg->add_option("--cap", cap, "node count limit");

  auto* betti = app.add_subcommand("betti", "Betti numbers of a complex");
  std::string betti_input, method = "rank";
  betti->add_option("input,--input", betti_input, "complex file")->required();
  betti->add_option("--method", method, "rank, near-cone or full-shift")
      ->check(CLI::IsMember({"rank", "near-cone", "full-shift"}));

  auto* scan = app.add_subcommand("scan", "Betti monotonicity and contracted-graph acyclicity scan");
  std::vector<std::string> scan_inputs, psg_specs, from_files;
  unsigned random_count = 0, random_n = 6;
  scan->add_option("inputs", scan_inputs, "complex files");
  scan->add_option("--random", random_count, "number of random complexes");
  scan->add_option("--random-n", random_n, "vertices of the random complexes");
  scan->add_option("--psg", psg_specs, "n,k,m of a full partial shift graph");
  scan->add_option("--from", from_files, "hypergraph files to explore from");

  auto* reproduce = app.add_subcommand("reproduce", "recompute worked examples against embedded golden data");
  std::vector<std::string> names;
  bool list = false;
  reproduce->add_option("names", names, "targets, or 'all'");
  reproduce->add_flag("--list", list, "list targets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (const char* env = std::getenv("SHIFTLAB_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: SHIFTLAB_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  try {
    if (*shift) return cmd_shift(cfg, input, perm, matrix, force_complex, n_override);
    if (*psg) return cmd_psg(cfg, pn, pk, pm, from, contracted, cap);
    if (*betti) return cmd_betti(cfg, betti_input, method);
    if (*scan) return cmd_scan(cfg, scan_inputs, random_count, random_n, psg_specs, from_files);
    if (*reproduce) return cmd_reproduce(cfg, names, list);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
