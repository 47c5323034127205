#include "phpairs/dimacs.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "phpairs/errors.hpp"

namespace phpairs {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view field, std::size_t line_no, const char* what) {
  Int value{};
  const auto* end = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line_no, std::string("invalid ") + what + " '" + std::string(field) + "'");
  }
  return value;
}

Vertex parse_vertex(std::string_view field, std::size_t n, std::size_t line_no) {
  const auto id = parse_int<long long>(field, line_no, "vertex id");
  if (id < 1 || static_cast<unsigned long long>(id) > n) {
    throw ParseError(line_no, "vertex id " + std::string(field) + " out of range 1.." +
                                  std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

}  // namespace

Graph parse_dimacs(std::string_view text) {
  std::optional<Graph> graph;
  std::vector<Weight> weights;
  bool weighted = false;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t eol = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    const auto fields = split_fields(line);
    if (fields.empty() || fields[0] == "c") continue;

    const std::string_view tag = fields[0];
    if (tag == "p") {
      if (graph) throw ParseError(line_no, "duplicate problem line");
      if (fields.size() != 4 || (fields[1] != "edge" && fields[1] != "col")) {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      const auto n = parse_int<long long>(fields[2], line_no, "vertex count");
      parse_int<long long>(fields[3], line_no, "edge count");
      if (n < 0) throw ParseError(line_no, "negative vertex count");
      graph.emplace(static_cast<std::size_t>(n));
      weights.assign(static_cast<std::size_t>(n), Weight{1});
    } else if (tag == "e") {
      if (!graph) throw ParseError(line_no, "edge line before problem line");
      if (fields.size() != 3) throw ParseError(line_no, "malformed edge line");
      const Vertex u = parse_vertex(fields[1], graph->order(), line_no);
      const Vertex v = parse_vertex(fields[2], graph->order(), line_no);
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::string(fields[1]));
      graph->add_edge(u, v);
    } else if (tag == "n") {
      if (!graph) throw ParseError(line_no, "weight line before problem line");
      if (fields.size() != 3) throw ParseError(line_no, "malformed weight line");
      const Vertex v = parse_vertex(fields[1], graph->order(), line_no);
      weights[v] = parse_int<Weight>(fields[2], line_no, "weight");
      weighted = true;
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tag) + "'");
    }
  }
  if (!graph) throw ParseError(0, "missing problem line");
  if (weighted) graph->set_weights(std::move(weights));
  return std::move(*graph);
}

std::string write_dimacs(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.order() << ' ' << g.edge_count() << '\n';
  if (g.has_weights()) {
    for (Vertex v = 0; v < g.order(); ++v) out << "n " << v + 1 << ' ' << g.weight(v) << '\n';
  }
  for (const auto& [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

Graph read_dimacs_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_dimacs(buffer.str());
}

void write_dimacs_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << write_dimacs(g);
}

}  // namespace phpairs
