#pragma once

#include <string>
#include <vector>

#include "netvalue/fitting.hpp"

namespace netvalue {

// Shortest decimal form that round-trips the exact double; keeps CSV and
// stdout byte-stable across runs.
std::string format_double(double v);

std::string read_file(const std::string& path);

// Writes to <path>.tmp in the same directory, then renames over the target,
// so a failed run never leaves a partial file behind.
void write_file_atomic(const std::string& path, const std::string& content);

// Two-column numeric CSV. A single non-numeric leading row is treated as a
// header and skipped; anything else malformed is an error.
std::vector<XY> parse_xy_csv(const std::string& text);

}  // namespace netvalue
