#pragma once

#include <span>
#include <string>
#include <vector>

#include "colortool/color.hpp"
#include "colortool/cvd.hpp"

namespace colortool {

// Parses each entry; a ParseError names the index of the offending color.
std::vector<HexCode> parse_hex_list(std::span<const std::string> texts);

// parse -> linear RGB -> matrix -> clamp -> sRGB -> hex, order preserved.
std::vector<HexCode> simulate_cvd(std::span<const HexCode> colors, CvdKind kind,
                                  double severity);

// Scales HCL chroma by (1 - amount); amount = 1 yields grays.
std::vector<HexCode> desaturate(std::span<const HexCode> colors, double amount = 1.0);

// Positive amounts move L proportionally toward 100, negative toward 0.
// Chroma is then limited to what the gamut allows at the new luminance, so
// +1 and -1 land exactly on white and black.
std::vector<HexCode> adjust_luminance(std::span<const HexCode> colors, double amount);

// WCAG 2.x relative luminance in [0,1].
double relative_luminance(const HexCode& color);

// (Y_hi + 0.05) / (Y_lo + 0.05), in [1, 21].
double contrast_ratio(const HexCode& a, const HexCode& b);

struct LuminanceProfile {
  std::vector<double> luminance;  // HCL L per color
  bool monotone = false;          // strictly increasing or strictly decreasing
};

LuminanceProfile luminance_profile(std::span<const HexCode> colors);

}  // namespace colortool
