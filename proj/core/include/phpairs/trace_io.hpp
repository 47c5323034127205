#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "phpairs/elimination.hpp"

namespace phpairs {

/// JSON document described by schema/trace.schema.json. Ids are 0-based.
/// The output is canonical: serialize(parse(serialize(t))) == serialize(t).
std::string serialize_trace(const ReductionTrace& trace);
/// Throws ParseError on malformed documents and ContractViolation on invalid
/// gadgets.
ReductionTrace parse_trace(std::string_view json_text);

ReductionTrace read_trace_file(const std::filesystem::path& path);
void write_trace_file(const std::filesystem::path& path, const ReductionTrace& trace);

}  // namespace phpairs
