#include "phpairs/trace_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "phpairs/errors.hpp"

namespace phpairs {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFormat = "phpairs-trace";
constexpr int kVersion = 1;

Json graph_to_json(const Graph& g) {
  Json out;
  out["n"] = g.order();
  out["weights"] = g.has_weights() ? Json(std::vector<Weight>(g.weights().begin(), g.weights().end()))
                                   : Json(nullptr);
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  return out;
}

Graph graph_from_json(const Json& j) {
  Graph g(j.at("n").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError(0, "edge must be a pair of ids");
    const auto u = e[0].get<Vertex>();
    const auto v = e[1].get<Vertex>();
    if (u >= g.order() || v >= g.order() || u == v) throw ParseError(0, "invalid edge in trace");
    g.add_edge(u, v);
  }
  const Json& w = j.at("weights");
  if (!w.is_null()) g.set_weights(w.get<std::vector<Weight>>());
  return g;
}

}  // namespace

std::string serialize_trace(const ReductionTrace& trace) {
  Json doc;
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["strategy"] = trace.strategy;
  doc["original"] = graph_to_json(trace.original);
  Json reduced = graph_to_json(trace.reduced);
  reduced["labels"] = trace.reduced_labels;
  doc["reduced"] = std::move(reduced);

  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json s;
    s["k1"] = step.k1;
    s["k2"] = step.k2;
    s["gadget"] = {{"a1", step.gadget.a1_size()},
                   {"a2", step.gadget.a2_size()},
                   {"cross", step.gadget.row_strings()}};
    s["placement"] = {{"a1", step.placement.a1}, {"a2", step.placement.a2}};
    s["strategy"] = step.strategy;
    s["strategy_data"] = step.strategy_data;
    steps.push_back(std::move(s));
  }
  doc["steps"] = std::move(steps);
  return doc.dump(2) + "\n";
}

ReductionTrace parse_trace(std::string_view json_text) {
  try {
    const Json doc = Json::parse(json_text);
    if (doc.at("format").get<std::string>() != kFormat) throw ParseError(0, "not a phpairs trace");
    if (doc.at("version").get<int>() != kVersion) throw ParseError(0, "unsupported trace version");

    ReductionTrace trace;
    trace.strategy = doc.at("strategy").get<std::string>();
    if (trace.strategy != "max-clique" && trace.strategy != "stable-set" &&
        trace.strategy != "collapse") {
      throw ParseError(0, "unknown strategy '" + trace.strategy + "'");
    }
    trace.original = graph_from_json(doc.at("original"));
    const Json& reduced = doc.at("reduced");
    trace.reduced = graph_from_json(reduced);
    trace.reduced_labels = reduced.at("labels").get<std::vector<Vertex>>();
    if (trace.reduced_labels.size() != trace.reduced.order()) {
      throw ParseError(0, "reduced labels do not match the reduced graph order");
    }

    for (const auto& s : doc.at("steps")) {
      ReductionStep step;
      step.k1 = s.at("k1").get<std::vector<Vertex>>();
      step.k2 = s.at("k2").get<std::vector<Vertex>>();
      const Json& gadget = s.at("gadget");
      step.gadget = NonProper2Clique::from_row_strings(gadget.at("cross").get<std::vector<std::string>>());
      if (step.gadget.a1_size() != gadget.at("a1").get<std::size_t>() ||
          step.gadget.a2_size() != gadget.at("a2").get<std::size_t>()) {
        throw ParseError(0, "gadget sizes disagree with its cross matrix");
      }
      step.placement.a1 = s.at("placement").at("a1").get<std::vector<Vertex>>();
      step.placement.a2 = s.at("placement").at("a2").get<std::vector<Vertex>>();
      step.strategy = s.at("strategy").get<std::string>();
      if (step.strategy != trace.strategy) throw ParseError(0, "step strategy differs from the trace");
      step.strategy_data = s.at("strategy_data").get<std::vector<Vertex>>();
      trace.steps.push_back(std::move(step));
    }
    return trace;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("malformed trace: ") + e.what());
  }
}

ReductionTrace read_trace_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_trace(buffer.str());
}

void write_trace_file(const std::filesystem::path& path, const ReductionTrace& trace) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_trace(trace);
}

}  // namespace phpairs
