#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cscf/record.hpp"

namespace cscf::io
{

/// One JSON object on a single line, keys in a fixed order with wall_time
/// last. Non-finite scores are written as null.
std::string to_json_line(const RunRecord& record);

/// Inverse of to_json_line; null scores read back as +inf. Throws
/// Error{IoError} on malformed input.
RunRecord from_json_line(std::string_view line);

/// "iteration,best_fitness" rows for the record's convergence curve.
std::string curve_csv(const RunRecord& record);

/// Shortest text that reads back to the same double; "inf"/"-inf"/"nan"
/// for non-finite values.
std::string format_double(double v);

/// Writes to a sibling temporary file and renames it into place. Throws
/// Error{IoError}.
void write_atomic(const std::filesystem::path& path, std::string_view content);

}  // namespace cscf::io
