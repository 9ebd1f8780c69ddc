#include "colortool/color.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "colortool/error.hpp"

namespace colortool {
namespace {

constexpr Matrix3 invert(const Matrix3& m) {
  const double a = m[1][1] * m[2][2] - m[1][2] * m[2][1];
  const double b = m[1][2] * m[2][0] - m[1][0] * m[2][2];
  const double c = m[1][0] * m[2][1] - m[1][1] * m[2][0];
  const double det = m[0][0] * a + m[0][1] * b + m[0][2] * c;
  return {{
      {a / det, (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det,
       (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det},
      {b / det, (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det,
       (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det},
      {c / det, (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det,
       (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det},
  }};
}

constexpr Matrix3 kXyzToRgb = invert(kRgbToXyz);

// CIE constants: (6/29)^3 and (29/3)^3.
constexpr double kEpsilon = 216.0 / 24389.0;
constexpr double kKappa = 24389.0 / 27.0;

void require_finite(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw InvalidColorError("color channel is not finite");
  }
}

double decode(double u) {
  const double a = std::fabs(u);
  const double v = a <= 0.04045 ? a / 12.92 : std::pow((a + 0.055) / 1.055, 2.4);
  return std::copysign(v, u);
}

double encode(double u) {
  const double a = std::fabs(u);
  const double v = a <= 0.0031308 ? 12.92 * a : 1.055 * std::pow(a, 1.0 / 2.4) - 0.055;
  return std::copysign(v, u);
}

std::array<double, 3> apply(const Matrix3& m, double a, double b, double c) {
  return {m[0][0] * a + m[0][1] * b + m[0][2] * c,
          m[1][0] * a + m[1][1] * b + m[1][2] * c,
          m[2][0] * a + m[2][1] * b + m[2][2] * c};
}

int hex_digit(char ch) {
  if (ch >= '0' && ch <= '9') return ch - '0';
  if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
  if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
  return -1;
}

}  // namespace

LinearRgb srgb_to_linear(const Srgb& c) {
  require_finite(c.r, c.g, c.b);
  return {decode(c.r), decode(c.g), decode(c.b)};
}

Srgb linear_to_srgb(const LinearRgb& c) {
  require_finite(c.r, c.g, c.b);
  return {encode(c.r), encode(c.g), encode(c.b)};
}

Xyz linear_to_xyz(const LinearRgb& c) {
  require_finite(c.r, c.g, c.b);
  const auto v = apply(kRgbToXyz, c.r, c.g, c.b);
  return {100.0 * v[0], 100.0 * v[1], 100.0 * v[2]};
}

LinearRgb xyz_to_linear(const Xyz& c) {
  require_finite(c.x, c.y, c.z);
  const auto v = apply(kXyzToRgb, c.x / 100.0, c.y / 100.0, c.z / 100.0);
  return {v[0], v[1], v[2]};
}

Luv xyz_to_luv(const Xyz& c, const WhitePoint& white) {
  require_finite(c.x, c.y, c.z);
  const double denom = c.x + 15.0 * c.y + 3.0 * c.z;
  if (denom == 0.0 || c.y <= 0.0) {
    return {0.0, 0.0, 0.0};
  }
  const double yr = c.y / white.yn;
  const double l = yr > kEpsilon ? 116.0 * std::cbrt(yr) - 16.0 : kKappa * yr;

  const double wdenom = white.xn + 15.0 * white.yn + 3.0 * white.zn;
  const double un = 4.0 * white.xn / wdenom;
  const double vn = 9.0 * white.yn / wdenom;
  const double up = 4.0 * c.x / denom;
  const double vp = 9.0 * c.y / denom;
  return {l, 13.0 * l * (up - un), 13.0 * l * (vp - vn)};
}

Xyz luv_to_xyz(const Luv& c, const WhitePoint& white) {
  require_finite(c.l, c.u, c.v);
  if (c.l <= 0.0) {
    return {0.0, 0.0, 0.0};
  }
  const double wdenom = white.xn + 15.0 * white.yn + 3.0 * white.zn;
  const double un = 4.0 * white.xn / wdenom;
  const double vn = 9.0 * white.yn / wdenom;

  const double y = c.l > kKappa * kEpsilon ? white.yn * std::pow((c.l + 16.0) / 116.0, 3.0)
                                           : white.yn * c.l / kKappa;
  const double up = c.u / (13.0 * c.l) + un;
  const double vp = c.v / (13.0 * c.l) + vn;
  if (vp == 0.0) {
    return {0.0, y, 0.0};
  }
  const double x = y * 9.0 * up / (4.0 * vp);
  const double z = y * (12.0 - 3.0 * up - 20.0 * vp) / (4.0 * vp);
  return {x, y, z};
}

Hcl luv_to_hcl(const Luv& c) {
  const double chroma = std::hypot(c.u, c.v);
  if (chroma == 0.0) {
    return {0.0, 0.0, c.l};
  }
  double h = std::atan2(c.v, c.u) * 180.0 / std::numbers::pi;
  if (h < 0.0) h += 360.0;
  if (h >= 360.0) h -= 360.0;
  return {h, chroma, c.l};
}

Luv hcl_to_luv(const Hcl& c) {
  // fmod keeps h and h+360 bit-identical after reduction.
  double h = std::fmod(c.h, 360.0);
  if (h < 0.0) h += 360.0;
  const double rad = h * std::numbers::pi / 180.0;
  return {c.l, c.c * std::cos(rad), c.c * std::sin(rad)};
}

Srgb hsv_to_srgb(const Hsv& c) {
  double h = std::fmod(c.h, 360.0);
  if (h < 0.0) h += 360.0;
  const double sector = h / 60.0;
  const int i = static_cast<int>(std::floor(sector)) % 6;
  const double f = sector - std::floor(sector);
  const double v = c.v;
  const double p = v * (1.0 - c.s);
  const double q = v * (1.0 - c.s * f);
  const double t = v * (1.0 - c.s * (1.0 - f));
  switch (i) {
    case 0: return {v, t, p};
    case 1: return {q, v, p};
    case 2: return {p, v, t};
    case 3: return {p, q, v};
    case 4: return {t, p, v};
    default: return {v, p, q};
  }
}

Hsv srgb_to_hsv(const Srgb& c) {
  const double mx = std::max({c.r, c.g, c.b});
  const double mn = std::min({c.r, c.g, c.b});
  const double delta = mx - mn;
  const double s = mx > 0.0 ? delta / mx : 0.0;
  if (delta == 0.0) {
    return {0.0, s, mx};
  }
  double h = 0.0;
  if (mx == c.r) {
    h = 60.0 * std::fmod((c.g - c.b) / delta, 6.0);
  } else if (mx == c.g) {
    h = 60.0 * ((c.b - c.r) / delta + 2.0);
  } else {
    h = 60.0 * ((c.r - c.g) / delta + 4.0);
  }
  if (h < 0.0) h += 360.0;
  return {h, s, mx};
}

Srgb parse_hex(std::string_view text) {
  if (text.empty() || text.front() != '#') {
    throw ParseError("hex color must start with '#': \"" + std::string(text) + "\"", 0);
  }
  if (text.size() != 7) {
    throw ParseError("hex color must have the form #RRGGBB: \"" + std::string(text) + "\"",
                     std::min<std::size_t>(text.size(), 7));
  }
  std::array<int, 3> bytes{};
  for (std::size_t k = 0; k < 3; ++k) {
    const int hi = hex_digit(text[1 + 2 * k]);
    const int lo = hex_digit(text[2 + 2 * k]);
    if (hi < 0 || lo < 0) {
      const std::size_t pos = hi < 0 ? 1 + 2 * k : 2 + 2 * k;
      throw ParseError("invalid hex digit '" + std::string(1, text[pos]) + "' at position " +
                           std::to_string(pos) + " in \"" + std::string(text) + "\"",
                       pos);
    }
    bytes[k] = hi * 16 + lo;
  }
  return {bytes[0] / 255.0, bytes[1] / 255.0, bytes[2] / 255.0};
}

HexCode format_hex(const Srgb& c) {
  require_finite(c.r, c.g, c.b);
  static constexpr char kDigits[] = "0123456789ABCDEF";
  std::string out = "#";
  for (double channel : {c.r, c.g, c.b}) {
    // nearbyint honours the default rounding mode: nearest, ties to even.
    const double scaled = std::nearbyint(channel * 255.0);
    if (scaled < 0.0 || scaled > 255.0) {
      throw InvalidColorError("channel out of gamut; apply fixup before formatting");
    }
    const int byte = static_cast<int>(scaled);
    out.push_back(kDigits[byte >> 4]);
    out.push_back(kDigits[byte & 15]);
  }
  return HexCode(std::move(out));
}

HexCode HexCode::parse(std::string_view text) {
  return format_hex(parse_hex(text));
}

Srgb HexCode::to_srgb() const { return parse_hex(text_); }

Srgb fixup_gamut(const Srgb& c) {
  return {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0)};
}

bool in_gamut(const Srgb& c) {
  return c.r >= 0.0 && c.r <= 1.0 && c.g >= 0.0 && c.g <= 1.0 && c.b >= 0.0 && c.b <= 1.0;
}

Srgb hcl_to_srgb(const Hcl& c) {
  return linear_to_srgb(xyz_to_linear(luv_to_xyz(hcl_to_luv(c))));
}

Hcl srgb_to_hcl(const Srgb& c) {
  return luv_to_hcl(xyz_to_luv(linear_to_xyz(srgb_to_linear(c))));
}

Hcl hex_to_hcl(const HexCode& c) { return srgb_to_hcl(c.to_srgb()); }

double max_chroma(double h, double l) {
  if (!(l > 0.0 && l < 100.0)) {
    return 0.0;
  }
  constexpr double kTol = 1e-9;
  auto inside = [&](double c) {
    const Srgb s = hcl_to_srgb({h, c, l});
    return s.r >= -kTol && s.r <= 1.0 + kTol && s.g >= -kTol && s.g <= 1.0 + kTol &&
           s.b >= -kTol && s.b <= 1.0 + kTol;
  };
  // Gamut slices of constant L are convex and contain the gray axis, so the
  // in-gamut chroma values along a hue ray form one interval [0, max].
  double lo = 0.0;
  double hi = 250.0;
  for (int k = 0; k < 60; ++k) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace colortool
