#pragma once

#include <string>
#include <vector>

#include "symhilb/exact/rational_function.hpp"

namespace symhilb::cli {

/// Fixture format: one line of numerator coefficients (degree-ascending,
/// whitespace or comma separated, rationals allowed) and one line of
/// denominator factors "m:e" meaning (1 - x^m)^e (a lone "1" for
/// the empty product). Blank lines and text after
/// '#' are ignored.
exact::RationalFunction parse_fixture(const std::string& numerator_line, const std::string& denominator_line);

/// Reads a two-line fixture file, or the first content line of each of two
/// files (numerator file, denominator file).
exact::RationalFunction read_fixture(const std::vector<std::string>& paths);

std::vector<std::string> content_lines(const std::string& path);

}  // namespace symhilb::cli
