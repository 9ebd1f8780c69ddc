#include "colortool/palette.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "colortool/error.hpp"
#include "colortool/numfmt.hpp"

namespace colortool {
namespace {

void check_finite(const char* field, double value) {
  if (!std::isfinite(value)) {
    throw InvalidSpecError(field, std::string(field) + " must be finite");
  }
}

void check_luminance(const char* field, double value) {
  check_finite(field, value);
  if (value < 0.0 || value > 100.0) {
    throw InvalidSpecError(field, std::string(field) + " must lie in [0, 100], got " +
                                      format_number(value));
  }
}

void check_chroma(const char* field, double value) {
  check_finite(field, value);
  if (value < 0.0) {
    throw InvalidSpecError(field, std::string(field) + " must be non-negative, got " +
                                      format_number(value));
  }
}

void check_power(const char* field, double value) {
  check_finite(field, value);
  if (value <= 0.0) {
    throw InvalidSpecError(field, std::string(field) + " must be positive, got " +
                                      format_number(value));
  }
}

std::optional<bool> parse_flag(std::string_view text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  return std::nullopt;
}

std::string optional_text(const std::optional<double>& value) {
  return value ? format_number(*value) : std::string("none");
}

HexCode to_hex(const Hcl& hcl, bool fixup, std::size_t index) {
  Srgb rgb = hcl_to_srgb(hcl);
  if (fixup) {
    rgb = fixup_gamut(rgb);
  }
  try {
    return format_hex(rgb);
  } catch (const InvalidColorError&) {
    throw InvalidColorError("color " + std::to_string(index) + " (h=" + format_number(hcl.h) +
                            ", c=" + format_number(hcl.c) + ", l=" + format_number(hcl.l) +
                            ") is outside the sRGB gamut and fixup is disabled");
  }
}

}  // namespace

std::string_view to_string(PaletteKind kind) {
  switch (kind) {
    case PaletteKind::qualitative: return "qualitative";
    case PaletteKind::sequential: return "sequential";
    case PaletteKind::diverging: return "diverging";
  }
  return "sequential";
}

PaletteKind parse_palette_kind(std::string_view text) {
  if (text == "qualitative") return PaletteKind::qualitative;
  if (text == "sequential") return PaletteKind::sequential;
  if (text == "diverging") return PaletteKind::diverging;
  throw InvalidInputError("unknown palette kind \"" + std::string(text) +
                          "\" (expected qualitative, sequential or diverging)");
}

bool SpecOverrides::empty() const {
  return !h1 && !h2 && !c1 && !c2 && !cmax && !l1 && !l2 && !p1 && !p2 && !reverse && !fixup;
}

void apply_overrides(PaletteSpec& spec, const SpecOverrides& o) {
  if (o.h1) spec.h1 = *o.h1;
  if (o.h2) spec.h2 = o.h2;
  if (o.c1) spec.c1 = *o.c1;
  if (o.c2) spec.c2 = o.c2;
  if (o.cmax) spec.cmax = o.cmax;
  if (o.l1) spec.l1 = *o.l1;
  if (o.l2) spec.l2 = o.l2;
  if (o.p1) spec.p1 = *o.p1;
  if (o.p2) spec.p2 = o.p2;
  if (o.reverse) spec.reverse = *o.reverse;
  if (o.fixup) spec.fixup = *o.fixup;
}

void set_override(SpecOverrides& o, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw InvalidInputError("override must be key=value: \"" + std::string(assignment) + "\"");
  }
  const std::string_view key = assignment.substr(0, eq);
  const std::string_view value = assignment.substr(eq + 1);

  if (key == "reverse" || key == "fixup") {
    const auto flag = parse_flag(value);
    if (!flag) {
      throw InvalidInputError("override " + std::string(key) + " expects a boolean, got \"" +
                              std::string(value) + "\"");
    }
    (key == "reverse" ? o.reverse : o.fixup) = *flag;
    return;
  }

  std::optional<double>* slot = nullptr;
  if (key == "h1") slot = &o.h1;
  else if (key == "h2") slot = &o.h2;
  else if (key == "c1") slot = &o.c1;
  else if (key == "c2") slot = &o.c2;
  else if (key == "cmax") slot = &o.cmax;
  else if (key == "l1") slot = &o.l1;
  else if (key == "l2") slot = &o.l2;
  else if (key == "p1") slot = &o.p1;
  else if (key == "p2") slot = &o.p2;
  else {
    throw InvalidInputError("unknown override key \"" + std::string(key) + "\"");
  }
  const auto number = parse_number(value);
  if (!number) {
    throw InvalidInputError("override " + std::string(key) + " expects a number, got \"" +
                            std::string(value) + "\"");
  }
  *slot = *number;
}

void validate(const PaletteSpec& spec) {
  check_finite("h1", spec.h1);
  if (spec.h2) check_finite("h2", *spec.h2);
  check_chroma("c1", spec.c1);
  if (spec.c2) check_chroma("c2", *spec.c2);
  if (spec.cmax) check_chroma("cmax", *spec.cmax);
  check_luminance("l1", spec.l1);
  if (spec.l2) check_luminance("l2", *spec.l2);
  check_power("p1", spec.p1);
  if (spec.p2) check_power("p2", *spec.p2);

  if (spec.kind == PaletteKind::sequential && spec.cmax) {
    const double ends = std::max(spec.c1, spec.c2.value_or(0.0));
    if (*spec.cmax < ends) {
      throw InvalidSpecError("cmax", "cmax (" + format_number(*spec.cmax) +
                                         ") must not be below the endpoint chroma (" +
                                         format_number(ends) + ")");
    }
  }
}

Hcl sequential_path(const PaletteSpec& spec, double i) {
  const double h1 = spec.h1;
  const double h2 = spec.h2.value_or(h1);
  const double c1 = spec.c1;
  const double c2 = spec.c2.value_or(0.0);
  const double l1 = spec.l1;
  const double l2 = spec.l2.value_or(l1);
  const double p2 = spec.p2.value_or(spec.p1);
  const double u = std::pow(i, spec.p1);

  double c = c2 - u * (c2 - c1);
  if (spec.cmax) {
    const double cmax = *spec.cmax;
    // Knot where the triangle peaks; outside (0,1) the triangle degenerates
    // to the straight path.
    const double j = std::fabs(cmax - c2) / (std::fabs(cmax - c1) + std::fabs(cmax - c2));
    if (j > 0.0 && j < 1.0) {
      c = u <= j ? c2 + (cmax - c2) * u / j : cmax - (cmax - c1) * (u - j) / (1.0 - j);
    }
  }
  return {h2 - i * (h2 - h1), c, l2 - std::pow(i, p2) * (l2 - l1)};
}

Hcl diverging_path(const PaletteSpec& spec, double t) {
  const double a = std::fabs(t);
  const double l1 = spec.l1;
  const double l2 = spec.l2.value_or(l1);
  const double p2 = spec.p2.value_or(spec.p1);
  const double h = t >= 0.0 ? spec.h1 : spec.h2.value_or(spec.h1);
  return {h, spec.c1 * std::pow(a, spec.p1), l2 - std::pow(a, p2) * (l2 - l1)};
}

Hcl qualitative_path(const PaletteSpec& spec, int k, int n) {
  if (n <= 1) {
    return {spec.h1, spec.c1, spec.l1};
  }
  const double h2 = spec.h2.value_or(spec.h1 + 360.0 * (n - 1) / n);
  const double h = spec.h1 + (static_cast<double>(k) / (n - 1)) * (h2 - spec.h1);
  return {h, spec.c1, spec.l1};
}

std::vector<Hcl> trajectory(const PaletteSpec& spec, int n) {
  if (n < 1) {
    throw InvalidCountError("number of colors must be at least 1, got " + std::to_string(n));
  }
  validate(spec);
  std::vector<Hcl> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    switch (spec.kind) {
      case PaletteKind::sequential: {
        const double i = n == 1 ? 1.0 : 1.0 - static_cast<double>(k) / (n - 1);
        out.push_back(sequential_path(spec, i));
        break;
      }
      case PaletteKind::diverging: {
        // Mirror the index so that t_k = -t_{n-1-k} bit-for-bit.
        double t = 1.0;
        if (n > 1) {
          const int m = n - 1;
          t = 2 * k < m ? static_cast<double>(m - 2 * k) / m
                        : -static_cast<double>(2 * k - m) / m;
        }
        out.push_back(diverging_path(spec, t));
        break;
      }
      case PaletteKind::qualitative:
        out.push_back(qualitative_path(spec, k, n));
        break;
    }
  }
  if (spec.reverse) {
    std::reverse(out.begin(), out.end());
  }
  return out;
}

Palette sample(const PaletteSpec& spec, int n) {
  const auto path = trajectory(spec, n);
  Palette palette;
  palette.label = spec.name.empty() ? std::string(to_string(spec.kind)) : spec.name;
  palette.colors.reserve(path.size());
  for (std::size_t k = 0; k < path.size(); ++k) {
    palette.colors.push_back(to_hex(path[k], spec.fixup, k));
  }
  return palette;
}

Palette rainbow_hsv(int n, double start, double end, bool reverse) {
  if (n < 1) {
    throw InvalidCountError("number of colors must be at least 1, got " + std::to_string(n));
  }
  if (!(start >= 0.0 && start <= 1.0) || !(end >= 0.0 && end <= 1.0)) {
    throw InvalidInputError("rainbow start and end must lie in [0, 1]");
  }
  Palette palette;
  palette.label = "Rainbow";
  for (int k = 0; k < n; ++k) {
    const double frac = n == 1 ? start : start + k * (end - start) / (n - 1);
    palette.colors.push_back(format_hex(fixup_gamut(hsv_to_srgb({360.0 * frac, 1.0, 1.0}))));
  }
  if (reverse) {
    std::reverse(palette.colors.begin(), palette.colors.end());
  }
  return palette;
}

std::string describe(const PaletteSpec& spec) {
  std::ostringstream out;
  out << "name: " << (spec.name.empty() ? "none" : spec.name) << '\n'
      << "kind: " << to_string(spec.kind) << '\n'
      << "h1: " << format_number(spec.h1) << '\n'
      << "h2: " << optional_text(spec.h2) << '\n'
      << "c1: " << format_number(spec.c1) << '\n'
      << "c2: " << optional_text(spec.c2) << '\n'
      << "cmax: " << optional_text(spec.cmax) << '\n'
      << "l1: " << format_number(spec.l1) << '\n'
      << "l2: " << optional_text(spec.l2) << '\n'
      << "p1: " << format_number(spec.p1) << '\n'
      << "p2: " << optional_text(spec.p2) << '\n'
      << "fixup: " << (spec.fixup ? "true" : "false") << '\n'
      << "reverse: " << (spec.reverse ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace colortool
