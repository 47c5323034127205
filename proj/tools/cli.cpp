#include "cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "phpairs/detection.hpp"
#include "phpairs/dimacs.hpp"
#include "phpairs/elimination.hpp"
#include "phpairs/errors.hpp"
#include "phpairs/generate.hpp"
#include "phpairs/lift.hpp"
#include "phpairs/oracles.hpp"
#include "phpairs/strategies.hpp"
#include "phpairs/trace_io.hpp"
#include "solution_io.hpp"

namespace phpairs::cli {
namespace {

/// Thrown for bad invocations that CLI11 cannot see (mismatched kinds, caps).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

std::string format_pair(const CliquePair& p) {
  return "(" + format_set(p.k1) + "," + format_set(p.k2) + ")";
}

std::optional<PhEmbedding> scan_edges(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (auto hit = find_ph_embedding(g, u, v)) return hit;
  }
  return std::nullopt;
}

// detect ---------------------------------------------------------------

struct DetectOptions {
  std::string input;
  std::vector<long long> seed;
};

int cmd_detect(const DetectOptions& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.input);
  if (!o.seed.empty()) {
    for (long long id : o.seed) {
      if (id < 1 || static_cast<std::size_t>(id) > g.order()) {
        throw UsageError("seed vertex " + std::to_string(id) + " outside 1.." +
                         std::to_string(g.order()));
      }
    }
    const auto u = static_cast<Vertex>(o.seed[0] - 1);
    const auto v = static_cast<Vertex>(o.seed[1] - 1);
    const auto hit = u == v ? std::nullopt : find_ph_embedding(g, u, v);
    out << (hit ? format_pair(hit->pair) : std::string("none")) << '\n';
    return kExitOk;
  }
  const auto hit = scan_edges(g);
  out << (hit ? format_pair(hit->pair) : std::string("PH-free")) << '\n';
  return kExitOk;
}

// reduce ---------------------------------------------------------------

struct ReduceOptions {
  std::string input;
  std::string strategy = "max-clique";
  std::string trace;
  std::string output;
};

int cmd_reduce(const ReduceOptions& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.input);
  const auto strategy = make_strategy(o.strategy);
  const ReductionTrace trace = eliminate_all(g, *strategy);
  if (!o.output.empty()) write_dimacs_file(o.output, trace.reduced);
  if (!o.trace.empty()) write_trace_file(o.trace, trace);
  out << "strategy " << o.strategy << '\n'
      << "q " << trace.q() << '\n'
      << "before |V|=" << g.order() << " |E|=" << g.edge_count() << '\n'
      << "after |V|=" << trace.reduced.order() << " |E|=" << trace.reduced.edge_count() << '\n';
  if (o.output.empty()) out << write_dimacs(trace.reduced);
  return kExitOk;
}

// lift -----------------------------------------------------------------

struct LiftOptions {
  std::string trace;
  std::string solution;
  std::string kind;
  std::string output;
};

int cmd_lift(const LiftOptions& o, std::ostream& out, std::ostream& err) {
  const ReductionTrace trace = read_trace_file(o.trace);
  const std::string wanted = o.kind == "coloring" ? "max-clique" : "stable-set";
  if (trace.strategy != wanted) {
    throw UsageError("a " + o.kind + " can only be lifted through a " + wanted + " trace, not " +
                     trace.strategy);
  }
  const std::string text = read_text_file(o.solution);
  const std::size_t n = trace.reduced.order();
  std::string result;
  if (o.kind == "coloring") {
    const Coloring coloring = parse_coloring(text, n);
    if (!is_proper_coloring(trace.reduced, coloring)) {
      err << "error: the coloring is not proper on the reduced graph\n";
      return kExitVerifyFailed;
    }
    result = format_coloring(lift_coloring(trace, coloring));
  } else {
    const auto stable = parse_stable_set(text, n);
    if (!is_stable(trace.reduced, VertexSet(n, std::span<const Vertex>(stable)))) {
      err << "error: the vertex set is not stable in the reduced graph\n";
      return kExitVerifyFailed;
    }
    result = format_stable_set(lift_stable_set(trace, stable));
  }
  if (o.output.empty()) {
    out << result;
  } else {
    write_text_file(o.output, result);
  }
  return kExitOk;
}

// verify ---------------------------------------------------------------

struct VerifyOptions {
  std::string input;
  std::string trace;
  bool deep = false;
  std::size_t cap = oracles::OracleConfig{}.max_vertices;
};

class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}

  void check(const std::string& name, bool ok) {
    out_ << (ok ? "pass " : "FAIL ") << name << '\n';
    failures_ += ok ? 0 : 1;
  }
  bool ok() const { return failures_ == 0; }

 private:
  std::ostream& out_;
  std::size_t failures_ = 0;
};

Weight weight_of(const Graph& g, const std::vector<Vertex>& vertices) {
  Weight total = 0;
  for (Vertex v : vertices) total += g.weight(v);
  return total;
}

void verify_trace(const Graph& g, const ReductionTrace& trace, const VerifyOptions& o,
                  const oracles::OracleConfig& config, Report& report) {
  report.check("input equals the trace's reduced graph", g == trace.reduced);
  bool replay_ok = true;
  try {
    replay_trace(trace);
  } catch (const ContractViolation&) {
    replay_ok = false;
  }
  report.check("trace replays onto its reduced graph", replay_ok);
  report.check("q <= |E(G0)|", trace.q() <= trace.original.edge_count());
  if (!o.deep || !replay_ok) return;

  const Graph& g0 = trace.original;
  const Graph& gq = trace.reduced;
  if (trace.strategy == "max-clique") {
    const auto chi = oracles::brute_force_chromatic(g0, config);
    report.check("chromatic number preserved", chi == oracles::brute_force_chromatic(gq, config));
    report.check("clique number preserved",
                 oracles::brute_force_clique(g0, config) == oracles::brute_force_clique(gq, config));
    const Coloring lifted = lift_coloring(trace, oracles::brute_force_coloring(gq, config));
    report.check("optimal coloring lifts to an optimal coloring",
                 is_proper_coloring(g0, lifted) && color_count(lifted) == chi);
  } else if (trace.strategy == "stable-set") {
    const auto best0 = oracles::brute_force_mwss(g0, config);
    const auto bestq = oracles::brute_force_mwss(gq, config);
    report.check("max-weight stable set preserved", best0.weight == bestq.weight);
    const auto lifted = lift_stable_set(trace, bestq.vertices);
    report.check("optimal stable set lifts with equal weight",
                 is_stable(g0, VertexSet(g0.order(), std::span<const Vertex>(lifted))) &&
                     weight_of(g0, lifted) == best0.weight);
  }
  if (oracles::is_perfect_small(g0, config)) {
    report.check("perfection preserved", oracles::is_perfect_small(gq, config));
  }
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const Graph g = read_dimacs_file(o.input);
  std::optional<ReductionTrace> trace;
  if (!o.trace.empty()) trace = read_trace_file(o.trace);

  oracles::OracleConfig config;
  config.max_vertices = o.cap;
  config.max_vertices_perfect = o.cap;
  if (o.deep) {
    std::size_t largest = g.order();
    if (trace) largest = std::max(largest, trace->original.order());
    if (largest > o.cap) {
      throw UsageError("--deep needs at most " + std::to_string(o.cap) + " vertices, got " +
                       std::to_string(largest));
    }
  }

  Report report(out);
  const bool fast_free = !scan_edges(g).has_value();
  report.check("no PH-embedding on any edge", fast_free);
  bool free = fast_free;
  if (o.deep) {
    const bool oracle_free = oracles::brute_force_ph_pairs(g, config).empty();
    report.check("no PH pair by exhaustive search", oracle_free);
    std::vector<VertexPair> detected;
    for (const auto& [u, v] : g.edges()) {
      if (find_ph_embedding(g, u, v)) detected.emplace_back(u, v);
    }
    report.check("detection agrees with exhaustive search",
                 detected == oracles::brute_force_ph_seed_pairs(g, config));
    free = free && oracle_free;
  }
  if (trace) verify_trace(g, *trace, o, config, report);
  if (free) out << "PH-free confirmed\n";
  out << (report.ok() ? "all checks passed" : "verification FAILED") << '\n';
  return report.ok() ? kExitOk : kExitVerifyFailed;
}

// generate -------------------------------------------------------------

struct GenerateOptions {
  RandomGraphOptions graph;
  std::string output;
};

int cmd_generate(const GenerateOptions& o, std::ostream& out) {
  const Graph g = random_graph(o.graph);
  if (o.output.empty()) {
    out << write_dimacs(g);
  } else {
    write_dimacs_file(o.output, g);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Find and eliminate proper homogeneous pairs of cliques", "phpairs"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  DetectOptions detect;
  auto* detect_cmd = app.add_subcommand("detect", "Search for a PH pair of cliques");
  detect_cmd->add_option("input", detect.input, "DIMACS graph")->required();
  detect_cmd->add_option("--seed", detect.seed, "Seed pair u v (1-based)")->expected(2);

  ReduceOptions reduce;
  auto* reduce_cmd = app.add_subcommand("reduce", "Eliminate every PH pair of cliques");
  reduce_cmd->add_option("input", reduce.input, "DIMACS graph")->required();
  reduce_cmd->add_option("--strategy", reduce.strategy, "Replacement gadget")
      ->check(CLI::IsMember({"max-clique", "stable-set", "collapse"}))
      ->capture_default_str();
  reduce_cmd->add_option("--trace", reduce.trace, "Write the JSON trace here");
  reduce_cmd->add_option("--output", reduce.output, "Write the reduced DIMACS graph here");

  LiftOptions lift;
  auto* lift_cmd = app.add_subcommand("lift", "Carry a solution of the reduced graph back");
  lift_cmd->add_option("--trace", lift.trace, "JSON trace from reduce")->required();
  lift_cmd->add_option("--solution", lift.solution, "Solution of the reduced graph")->required();
  lift_cmd->add_option("--kind", lift.kind, "Solution kind")
      ->required()
      ->check(CLI::IsMember({"coloring", "stable-set"}));
  lift_cmd->add_option("--output", lift.output, "Write the lifted solution here");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check a graph, and optionally its trace");
  verify_cmd->add_option("input", verify.input, "DIMACS graph")->required();
  verify_cmd->add_flag("--deep", verify.deep, "Cross-check with exhaustive oracles");
  verify_cmd->add_option("--trace", verify.trace, "Trace whose reduced graph is the input");
  verify_cmd->add_option("--cap", verify.cap, "Largest graph the oracles accept")
      ->check(CLI::Range(1, 40))
      ->capture_default_str();

  GenerateOptions generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a random DIMACS graph");
  generate_cmd->add_option("--n", generate.graph.n, "Vertices")->required();
  generate_cmd->add_option("--density", generate.graph.density, "Edge probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  generate_cmd->add_option("--seed", generate.graph.seed, "RNG seed")->capture_default_str();
  generate_cmd->add_option("--weights", generate.graph.max_weight,
                           "Random weights in [1, W]; 0 leaves the graph unweighted")
      ->check(CLI::NonNegativeNumber);
  generate_cmd->add_flag("--plant", generate.graph.plant_ph_pair, "Plant a PH pair");
  generate_cmd->add_option("--output", generate.output, "Write the graph here");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (detect_cmd->parsed()) return cmd_detect(detect, out);
    if (reduce_cmd->parsed()) return cmd_reduce(reduce, out);
    if (lift_cmd->parsed()) return cmd_lift(lift, out, err);
    if (verify_cmd->parsed()) return cmd_verify(verify, out);
    if (generate_cmd->parsed()) return cmd_generate(generate, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const OracleCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InternalInvariantError& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace phpairs::cli
