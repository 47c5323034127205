#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "phpairs/graph.hpp"

namespace phpairs {

/// Parses DIMACS .col text: `c` comments, one `p edge <n> <m>` header,
/// `e <u> <v>` edges and `n <v> <w>` vertex weights, all ids 1-based.
/// Duplicate and reversed edge lines collapse into one edge. The `m` field
/// of the header is informational and not enforced.
///
/// Throws ParseError carrying the offending line number.
Graph parse_dimacs(std::string_view text);

/// Canonical DIMACS text: header, `n` lines in vertex order (only when the
/// graph carries weights), then `e` lines sorted lexicographically.
std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::filesystem::path& path);
void write_dimacs_file(const std::filesystem::path& path, const Graph& g);

}  // namespace phpairs
