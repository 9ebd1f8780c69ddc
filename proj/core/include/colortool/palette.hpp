#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "colortool/color.hpp"

namespace colortool {

enum class PaletteKind { qualitative, sequential, diverging };

std::string_view to_string(PaletteKind kind);
// Throws InvalidInputError for anything but the three kind names.
PaletteKind parse_palette_kind(std::string_view text);

// An HCL trajectory. Optional members fall back to:
//   h2 <- h1 (sequential, diverging); equal spacing over 360 (qualitative)
//   c2 <- 0, p2 <- p1, l2 <- l1
// cmax turns the sequential chroma path into a triangle c1 -> cmax -> c2.
struct PaletteSpec {
  PaletteKind kind = PaletteKind::sequential;
  double h1 = 0;
  std::optional<double> h2;
  double c1 = 0;
  std::optional<double> c2;
  std::optional<double> cmax;
  double l1 = 50;
  std::optional<double> l2;
  double p1 = 1;
  std::optional<double> p2;
  bool reverse = false;
  bool fixup = true;
  std::string name;

  bool operator==(const PaletteSpec&) const = default;
};

// Scalar replacements applied on top of a stored spec.
struct SpecOverrides {
  std::optional<double> h1, h2, c1, c2, cmax, l1, l2, p1, p2;
  std::optional<bool> reverse, fixup;

  bool empty() const;
};

void apply_overrides(PaletteSpec& spec, const SpecOverrides& overrides);

// Parses "key=value" into the matching override field. Throws
// InvalidInputError on an unknown key or a non-numeric value.
void set_override(SpecOverrides& overrides, std::string_view assignment);

struct Palette {
  std::string label;
  std::vector<HexCode> colors;
};

// Throws InvalidSpecError naming the first offending field.
void validate(const PaletteSpec& spec);

// Sequential trajectory at i in [0,1]; i = 1 is the first palette color.
Hcl sequential_path(const PaletteSpec& spec, double i);

// Diverging trajectory at t in [-1,1]; t = 0 is the neutral center, t > 0
// uses hue h1.
Hcl diverging_path(const PaletteSpec& spec, double t);

// Color k of n for a qualitative spec.
Hcl qualitative_path(const PaletteSpec& spec, int k, int n);

// The n pre-fixup HCL coordinates sample() converts, in output order
// (reverse applied).
std::vector<Hcl> trajectory(const PaletteSpec& spec, int n);

Palette sample(const PaletteSpec& spec, int n);

// Fully saturated HSV rainbow; start and end are fractions of the hue circle.
Palette rainbow_hsv(int n, double start = 0.0, double end = 2.0 / 3.0, bool reverse = false);

// Settings listing, one "key: value" per line in a fixed order:
// name, kind, h1, h2, c1, c2, cmax, l1, l2, p1, p2, fixup, reverse.
std::string describe(const PaletteSpec& spec);

}  // namespace colortool
