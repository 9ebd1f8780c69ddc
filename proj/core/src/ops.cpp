#include "colortool/ops.hpp"

#include <algorithm>
#include <cmath>

#include "colortool/error.hpp"

namespace colortool {

std::vector<HexCode> parse_hex_list(std::span<const std::string> texts) {
  std::vector<HexCode> out;
  out.reserve(texts.size());
  for (std::size_t k = 0; k < texts.size(); ++k) {
    try {
      out.push_back(HexCode::parse(texts[k]));
    } catch (const ParseError& e) {
      throw ParseError("color " + std::to_string(k) + ": " + e.what(), e.position());
    }
  }
  return out;
}

std::vector<HexCode> simulate_cvd(std::span<const HexCode> colors, CvdKind kind,
                                  double severity) {
  const Matrix3 m = cvd_matrix(kind, severity);
  std::vector<HexCode> out;
  out.reserve(colors.size());
  for (const auto& color : colors) {
    const LinearRgb in = srgb_to_linear(color.to_srgb());
    const LinearRgb sim = {
        m[0][0] * in.r + m[0][1] * in.g + m[0][2] * in.b,
        m[1][0] * in.r + m[1][1] * in.g + m[1][2] * in.b,
        m[2][0] * in.r + m[2][1] * in.g + m[2][2] * in.b,
    };
    const LinearRgb clamped = {std::clamp(sim.r, 0.0, 1.0), std::clamp(sim.g, 0.0, 1.0),
                               std::clamp(sim.b, 0.0, 1.0)};
    out.push_back(format_hex(fixup_gamut(linear_to_srgb(clamped))));
  }
  return out;
}

std::vector<HexCode> desaturate(std::span<const HexCode> colors, double amount) {
  if (!(amount >= 0.0 && amount <= 1.0)) {
    throw InvalidInputError("desaturation amount must lie in [0, 1]");
  }
  std::vector<HexCode> out;
  out.reserve(colors.size());
  for (const auto& color : colors) {
    Hcl hcl = hex_to_hcl(color);
    hcl.c *= 1.0 - amount;
    out.push_back(format_hex(fixup_gamut(hcl_to_srgb(hcl))));
  }
  return out;
}

std::vector<HexCode> adjust_luminance(std::span<const HexCode> colors, double amount) {
  if (!(amount >= -1.0 && amount <= 1.0)) {
    throw InvalidInputError("luminance adjustment must lie in [-1, 1]");
  }
  std::vector<HexCode> out;
  out.reserve(colors.size());
  for (const auto& color : colors) {
    Hcl hcl = hex_to_hcl(color);
    hcl.l = amount >= 0.0 ? hcl.l + amount * (100.0 - hcl.l) : hcl.l * (1.0 + amount);
    hcl.l = std::clamp(hcl.l, 0.0, 100.0);
    hcl.c = std::min(hcl.c, max_chroma(hcl.h, hcl.l));
    out.push_back(format_hex(fixup_gamut(hcl_to_srgb(hcl))));
  }
  return out;
}

double relative_luminance(const HexCode& color) {
  const LinearRgb lin = srgb_to_linear(color.to_srgb());
  return 0.2126 * lin.r + 0.7152 * lin.g + 0.0722 * lin.b;
}

double contrast_ratio(const HexCode& a, const HexCode& b) {
  const double ya = relative_luminance(a);
  const double yb = relative_luminance(b);
  return (std::max(ya, yb) + 0.05) / (std::min(ya, yb) + 0.05);
}

LuminanceProfile luminance_profile(std::span<const HexCode> colors) {
  LuminanceProfile profile;
  profile.luminance.reserve(colors.size());
  for (const auto& color : colors) {
    profile.luminance.push_back(hex_to_hcl(color).l);
  }
  const auto& l = profile.luminance;
  const bool increasing = std::adjacent_find(l.begin(), l.end(), std::greater_equal<>()) == l.end();
  const bool decreasing = std::adjacent_find(l.begin(), l.end(), std::less_equal<>()) == l.end();
  profile.monotone = increasing || decreasing;
  return profile;
}

}  // namespace colortool
