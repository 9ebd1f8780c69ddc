#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace colortool {

// Shortest decimal that round-trips to the same double ("300", "1.1",
// "-86.66666666666667"). Negative zero prints as "0".
std::string format_number(double value);

// Fixed notation with the given number of decimals.
std::string format_fixed(double value, int decimals);

// Strict parse of a decimal or a simple fraction "a/b"; the whole input must
// be consumed. Returns nullopt on failure.
std::optional<double> parse_number(std::string_view text);

}  // namespace colortool
