#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "phpairs/lift.hpp"

namespace phpairs::cli {

// Plain-text solution files with 1-based vertex ids. Blank lines and lines
// starting with 'c' or '#' are skipped. Parse failures throw ParseError.

/// One "vertex color" pair per line; every vertex in [1, n] exactly once.
Coloring parse_coloring(const std::string& text, std::size_t n);
std::string format_coloring(const Coloring& coloring);

/// One vertex per line, no repeats.
std::vector<Vertex> parse_stable_set(const std::string& text, std::size_t n);
std::string format_stable_set(const std::vector<Vertex>& vertices);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace phpairs::cli
