#ifndef SLEEPTOPO_CSV_HPP
#define SLEEPTOPO_CSV_HPP

#include <charconv>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "sleeptopo/common.hpp"

namespace sleeptopo::csv {

/// Splits one CSV line on commas. The pipeline's formats are plain numeric
/// and identifier fields; quoting is not supported.
std::vector<std::string> split_line(const std::string& line);

/// Shortest round-trip decimal representation of a double. Deterministic,
/// so identical values always serialize to identical bytes.
std::string format_double(double v);

/// Parses a double, throwing ParseError with the given row number on failure.
double parse_double(std::string_view field, std::size_t row);

/// Parses a non-negative integer, throwing ParseError on failure.
long parse_long(std::string_view field, std::size_t row);

inline bool is_number(std::string_view field) {
    double out;
    auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
    return ec == std::errc() && p == field.data() + field.size();
}

}  // namespace sleeptopo::csv

#endif
