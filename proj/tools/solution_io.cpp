#include "solution_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

#include "phpairs/errors.hpp"

namespace phpairs::cli {
namespace {

bool skip_line(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == 'c' || line[first] == '#';
}

template <typename Visit>
void for_each_line(const std::string& text, Visit visit) {
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!skip_line(line)) visit(number, line);
  }
}

Vertex read_vertex(std::istringstream& fields, std::size_t line, std::size_t n) {
  long long id = 0;
  if (!(fields >> id)) throw ParseError(line, "expected a vertex id");
  if (id < 1 || static_cast<unsigned long long>(id) > n) {
    throw ParseError(line, "vertex " + std::to_string(id) + " outside 1.." + std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

void expect_end(std::istringstream& fields, std::size_t line) {
  std::string extra;
  if (fields >> extra) throw ParseError(line, "unexpected trailing text '" + extra + "'");
}

}  // namespace

Coloring parse_coloring(const std::string& text, std::size_t n) {
  Coloring coloring(n, -1);
  for_each_line(text, [&](std::size_t line, const std::string& content) {
    std::istringstream fields(content);
    const Vertex v = read_vertex(fields, line, n);
    long long color = 0;
    if (!(fields >> color) || color < 0 || color > std::numeric_limits<int>::max()) {
      throw ParseError(line, "expected a non-negative color");
    }
    expect_end(fields, line);
    if (coloring[v] != -1) throw ParseError(line, "vertex " + std::to_string(v + 1) + " colored twice");
    coloring[v] = static_cast<int>(color);
  });
  const auto missing = std::find(coloring.begin(), coloring.end(), -1);
  if (missing != coloring.end()) {
    throw ParseError(0, "vertex " + std::to_string(missing - coloring.begin() + 1) + " has no color");
  }
  return coloring;
}

std::string format_coloring(const Coloring& coloring) {
  std::string out;
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    out += std::to_string(v + 1) + ' ' + std::to_string(coloring[v]) + '\n';
  }
  return out;
}

std::vector<Vertex> parse_stable_set(const std::string& text, std::size_t n) {
  std::vector<Vertex> vertices;
  std::vector<bool> seen(n, false);
  for_each_line(text, [&](std::size_t line, const std::string& content) {
    std::istringstream fields(content);
    const Vertex v = read_vertex(fields, line, n);
    expect_end(fields, line);
    if (seen[v]) throw ParseError(line, "vertex " + std::to_string(v + 1) + " listed twice");
    seen[v] = true;
    vertices.push_back(v);
  });
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

std::string format_stable_set(const std::vector<Vertex>& vertices) {
  std::string out;
  for (Vertex v : vertices) out += std::to_string(v + 1) + '\n';
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path.string());
}

}  // namespace phpairs::cli
