#pragma once

// Color coordinates and the conversions between them.
//
// Conversion chain used throughout the toolkit:
//
//   hex <-> sRGB <-> linear RGB <-> XYZ (D65, Y of white = 100) <-> CIELUV <-> HCL
//                \-> HSV
//
// All functions are pure; none of them touch shared state.

#include <array>
#include <string>
#include <string_view>

namespace colortool {

// Gamma-encoded, display-referred sRGB. In gamut iff every channel is in [0,1].
struct Srgb {
  double r = 0, g = 0, b = 0;
  bool operator==(const Srgb&) const = default;
};

struct LinearRgb {
  double r = 0, g = 0, b = 0;
  bool operator==(const LinearRgb&) const = default;
};

struct Xyz {
  double x = 0, y = 0, z = 0;
  bool operator==(const Xyz&) const = default;
};

struct Luv {
  double l = 0, u = 0, v = 0;
  bool operator==(const Luv&) const = default;
};

// Polar CIELUV. Hue is in degrees and is not normalized on input; chroma is
// never negative. Achromatic colors report h = 0.
struct Hcl {
  double h = 0, c = 0, l = 0;
  bool operator==(const Hcl&) const = default;
};

struct Hsv {
  double h = 0, s = 0, v = 0;
  bool operator==(const Hsv&) const = default;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

struct WhitePoint {
  double xn, yn, zn;
};

// Linear sRGB -> XYZ (D65) matrix.
inline constexpr Matrix3 kRgbToXyz = {{
    {0.4124564, 0.3575761, 0.1804375},
    {0.2126729, 0.7151522, 0.0721750},
    {0.0193339, 0.1191920, 0.9503041},
}};

// D65 reference white, defined as the image of linear (1,1,1) so that every
// gray maps onto the achromatic axis exactly: (95.047, 100.00001, 108.883).
inline constexpr WhitePoint kD65 = {
    100.0 * (kRgbToXyz[0][0] + kRgbToXyz[0][1] + kRgbToXyz[0][2]),
    100.0 * (kRgbToXyz[1][0] + kRgbToXyz[1][1] + kRgbToXyz[1][2]),
    100.0 * (kRgbToXyz[2][0] + kRgbToXyz[2][1] + kRgbToXyz[2][2]),
};

// "#RRGGBB", uppercase. Only constructible through parse()/format_hex(), so a
// HexCode value is always canonical.
class HexCode {
 public:
  static HexCode parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  Srgb to_srgb() const;

  bool operator==(const HexCode&) const = default;

 private:
  friend HexCode format_hex(const Srgb& c);
  explicit HexCode(std::string text) : text_(std::move(text)) {}
  std::string text_;
};

// IEC 61966-2-1 transfer function, extended to negative inputs by odd symmetry.
LinearRgb srgb_to_linear(const Srgb& c);
Srgb linear_to_srgb(const LinearRgb& c);

Xyz linear_to_xyz(const LinearRgb& c);
LinearRgb xyz_to_linear(const Xyz& c);

Luv xyz_to_luv(const Xyz& c, const WhitePoint& white = kD65);
Xyz luv_to_xyz(const Luv& c, const WhitePoint& white = kD65);

Hcl luv_to_hcl(const Luv& c);
Luv hcl_to_luv(const Hcl& c);

Srgb hsv_to_srgb(const Hsv& c);
Hsv srgb_to_hsv(const Srgb& c);

// Accepts "#RRGGBB" in either case. Throws ParseError naming the offending
// character position.
Srgb parse_hex(std::string_view text);

// Rounds each channel to the nearest 8-bit value (ties to even). Throws
// InvalidColorError when a channel rounds outside [0,255].
HexCode format_hex(const Srgb& c);

// Per-channel clamp to [0,1].
Srgb fixup_gamut(const Srgb& c);
bool in_gamut(const Srgb& c);

// Full-chain shortcuts.
Srgb hcl_to_srgb(const Hcl& c);
Hcl srgb_to_hcl(const Srgb& c);
Hcl hex_to_hcl(const HexCode& c);

// Largest chroma at hue h and luminance l that still converts into the sRGB
// gamut (channel tolerance 1e-9), found by bisection. 0 at l <= 0 or l >= 100.
double max_chroma(double h, double l);

}  // namespace colortool
