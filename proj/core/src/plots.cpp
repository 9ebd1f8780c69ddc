#include "colortool/plots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include "colortool/error.hpp"
#include "colortool/numfmt.hpp"

namespace colortool {
namespace {

using Point = std::pair<double, double>;

constexpr const char* kAxisColor = "#000000";
constexpr const char* kGridColor = "#D9D9D9";
constexpr const char* kHueColor = "#7F3C8D";
constexpr const char* kChromaColor = "#11A579";
constexpr const char* kLuminanceColor = "#3969AC";

double unwrap_step(double delta) {
  while (delta >= 180.0) delta -= 360.0;
  while (delta < -180.0) delta += 360.0;
  return delta;
}

// Piecewise-linear hue as a function of luminance through the sampled path.
class HueOfLuminance {
 public:
  explicit HueOfLuminance(const std::vector<Hcl>& path) {
    for (const auto& p : path) knots_.emplace_back(p.l, p.h);
    std::stable_sort(knots_.begin(), knots_.end(),
                     [](const Point& a, const Point& b) { return a.first < b.first; });
  }

  double operator()(double l) const {
    if (l <= knots_.front().first) return knots_.front().second;
    if (l >= knots_.back().first) return knots_.back().second;
    for (std::size_t k = 1; k < knots_.size(); ++k) {
      const auto& [l0, h0] = knots_[k - 1];
      const auto& [l1, h1] = knots_[k];
      if (l <= l1) {
        if (l1 == l0) return h1;
        return h0 + (l - l0) / (l1 - l0) * (h1 - h0);
      }
    }
    return knots_.back().second;
  }

 private:
  std::vector<Point> knots_;
};

}  // namespace

SvgDocument swatchplot(const std::vector<SwatchSet>& sets, PlotSize size) {
  constexpr double kWidth = 640, kMargin = 10, kLabel = 180, kTitle = 24, kRow = 22, kGap = 6;
  if (sets.empty()) {
    throw InvalidInputError("swatchplot needs at least one swatch set");
  }
  double height = kMargin;
  for (const auto& set : sets) {
    if (set.rows.empty()) {
      throw InvalidInputError("swatch set \"" + set.title + "\" has no rows");
    }
    if (!set.title.empty()) height += kTitle;
    for (const auto& row : set.rows) {
      if (row.palette.colors.empty()) {
        throw InvalidInputError("swatch row \"" + row.label + "\" has no colors");
      }
      height += kRow + kGap;
    }
  }
  height += kMargin - kGap;

  SvgWriter svg(kWidth, height, size);
  double y = kMargin;
  for (const auto& set : sets) {
    if (!set.title.empty()) {
      svg.text(kMargin, y + 16, set.title, 14);
      y += kTitle;
    }
    for (const auto& row : set.rows) {
      svg.text(kMargin, y + 15, row.label, 12);
      const double x0 = kMargin + kLabel;
      const double w = (kWidth - kMargin - x0) / static_cast<double>(row.palette.colors.size());
      for (std::size_t k = 0; k < row.palette.colors.size(); ++k) {
        svg.rect(x0 + static_cast<double>(k) * w, y, w, kRow, row.palette.colors[k].text(),
                 "swatch");
      }
      y += kRow + kGap;
    }
  }
  return std::move(svg).finish();
}

Spectrum spectrum(const Palette& palette) {
  Spectrum s;
  for (const auto& color : palette.colors) {
    const Hcl hcl = hex_to_hcl(color);
    if (s.hue.empty()) {
      s.hue.push_back(hcl.h);
    } else {
      s.hue.push_back(s.hue.back() + unwrap_step(hcl.h - s.hue.back()));
    }
    s.chroma.push_back(hcl.c);
    s.luminance.push_back(hcl.l);
  }
  return s;
}

SvgDocument specplot(const Palette& palette, PlotSize size) {
  if (palette.colors.size() < 2) {
    throw InvalidInputError("specplot needs at least two colors");
  }
  constexpr double kWidth = 520, kHeight = 420;
  constexpr double kLeft = 60, kRight = 460, kTop = 30, kBottom = 290;
  constexpr double kStripTop = 315, kStripHeight = 30;

  const Spectrum s = spectrum(palette);
  const std::size_t n = palette.colors.size();

  const double cmax = *std::max_element(s.chroma.begin(), s.chroma.end());
  const double left_max = std::max(100.0, std::ceil(cmax / 20.0) * 20.0);
  double hue_lo = std::floor(*std::min_element(s.hue.begin(), s.hue.end()) / 30.0) * 30.0;
  double hue_hi = std::ceil(*std::max_element(s.hue.begin(), s.hue.end()) / 30.0) * 30.0;
  if (hue_hi - hue_lo < 30.0) {
    hue_lo -= 30.0;
    hue_hi += 30.0;
  }

  auto px = [&](std::size_t k) {
    return kLeft + static_cast<double>(k) * (kRight - kLeft) / static_cast<double>(n - 1);
  };
  auto py_left = [&](double v) { return kBottom - v / left_max * (kBottom - kTop); };
  auto py_right = [&](double h) {
    return kBottom - (h - hue_lo) / (hue_hi - hue_lo) * (kBottom - kTop);
  };

  SvgWriter svg(kWidth, kHeight, size);
  svg.text(kWidth / 2, 18, palette.label.empty() ? "HCL spectrum" : palette.label, 14, "middle");

  for (int k = 0; k <= 5; ++k) {
    const double v = left_max * k / 5.0;
    svg.line(kLeft, py_left(v), kRight, py_left(v), kGridColor, 0.5, "grid");
    svg.text(kLeft - 6, py_left(v) + 4, format_number(v), 10, "end");
    const double h = hue_lo + (hue_hi - hue_lo) * k / 5.0;
    svg.text(kRight + 6, py_left(v) + 4, format_number(std::round(h * 10) / 10), 10);
  }
  svg.line(kLeft, kTop, kLeft, kBottom, kAxisColor, 1, "axis");
  svg.line(kRight, kTop, kRight, kBottom, kAxisColor, 1, "axis");
  svg.line(kLeft, kBottom, kRight, kBottom, kAxisColor, 1, "axis");
  svg.text(18, (kTop + kBottom) / 2, "Chroma / Luminance", 11, "middle", -90);
  svg.text(kWidth - 14, (kTop + kBottom) / 2, "Hue", 11, "middle", 90);

  std::vector<Point> hue, chroma, luminance;
  for (std::size_t k = 0; k < n; ++k) {
    hue.emplace_back(px(k), py_right(s.hue[k]));
    chroma.emplace_back(px(k), py_left(s.chroma[k]));
    luminance.emplace_back(px(k), py_left(s.luminance[k]));
  }
  svg.polyline(luminance, kLuminanceColor, 2, "luminance");
  svg.polyline(chroma, kChromaColor, 2, "chroma");
  svg.polyline(hue, kHueColor, 2, "hue");

  const double w = (kRight - kLeft) / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    svg.rect(kLeft + static_cast<double>(k) * w, kStripTop, w, kStripHeight,
             palette.colors[k].text(), "swatch");
  }

  const double legend_y = 380;
  const std::pair<const char*, const char*> legend[] = {
      {"Hue", kHueColor}, {"Chroma", kChromaColor}, {"Luminance", kLuminanceColor}};
  double lx = kLeft;
  for (const auto& [label, color] : legend) {
    svg.line(lx, legend_y - 4, lx + 20, legend_y - 4, color, 2, "legend");
    svg.text(lx + 26, legend_y, label, 11);
    lx += 120;
  }
  return std::move(svg).finish();
}

HclPath hcl_path(const PaletteSpec& spec, int n) {
  if (spec.kind != PaletteKind::sequential) {
    throw UnsupportedKindError("hclplot supports sequential palettes only, got " +
                               std::string(to_string(spec.kind)));
  }
  if (n < 2) {
    throw InvalidCountError("hclplot needs at least two colors, got " + std::to_string(n));
  }
  const auto path = trajectory(spec, n);
  const Palette palette = sample(spec, n);

  HclPath out;
  out.colors = palette.colors;
  for (const auto& color : palette.colors) {
    out.points.push_back(hex_to_hcl(color));
  }
  double cmax = 0;
  for (const auto& p : path) cmax = std::max(cmax, p.c);
  out.chroma_axis_max = std::max(100.0, std::ceil(cmax / 10.0) * 10.0);

  const HueOfLuminance hue_at(path);
  const int l_cells = static_cast<int>(std::round(100.0 / kHclCellSize));
  const int c_cells = static_cast<int>(std::round(out.chroma_axis_max / kHclCellSize));
  for (int li = 0; li < l_cells; ++li) {
    const double l = (li + 0.5) * kHclCellSize;
    const double h = hue_at(l);
    for (int ci = 0; ci < c_cells; ++ci) {
      const double c = (ci + 0.5) * kHclCellSize;
      const Srgb rgb = hcl_to_srgb({h, c, l});
      if (!in_gamut(rgb)) continue;
      out.cells.push_back({c, l, h, format_hex(rgb)});
    }
  }
  return out;
}

SvgDocument hclplot(const PaletteSpec& spec, int n, PlotSize size) {
  constexpr double kWidth = 480, kHeight = 440;
  constexpr double kLeft = 60, kRight = 440, kTop = 40, kBottom = 390;
  const HclPath data = hcl_path(spec, n);

  auto px = [&](double c) { return kLeft + c / data.chroma_axis_max * (kRight - kLeft); };
  auto py = [&](double l) { return kBottom - l / 100.0 * (kBottom - kTop); };

  SvgWriter svg(kWidth, kHeight, size);
  svg.text(kWidth / 2, 22, spec.name.empty() ? "HCL path" : spec.name, 14, "middle");

  const double cw = px(kHclCellSize) - px(0);
  const double ch = py(0) - py(kHclCellSize);
  for (const auto& cell : data.cells) {
    svg.rect(px(cell.c - kHclCellSize / 2), py(cell.l + kHclCellSize / 2), cw, ch,
             cell.color.text(), "gamut");
  }

  svg.line(kLeft, kTop, kLeft, kBottom, kAxisColor, 1, "axis");
  svg.line(kLeft, kBottom, kRight, kBottom, kAxisColor, 1, "axis");
  for (int k = 0; k <= 5; ++k) {
    const double l = 20.0 * k;
    svg.text(kLeft - 6, py(l) + 4, format_number(l), 10, "end");
    const double c = data.chroma_axis_max * k / 5.0;
    svg.text(px(c), kBottom + 16, format_number(c), 10, "middle");
  }
  svg.text(kWidth / 2, kBottom + 36, "Chroma", 11, "middle");
  svg.text(18, (kTop + kBottom) / 2, "Luminance", 11, "middle", -90);

  std::vector<Point> line;
  for (const auto& p : data.points) line.emplace_back(px(p.c), py(p.l));
  svg.polyline(line, kAxisColor, 1.5, "path");
  for (std::size_t k = 0; k < data.points.size(); ++k) {
    svg.circle(line[k].first, line[k].second, 6, data.colors[k].text(), kAxisColor, "point");
  }
  return std::move(svg).finish();
}

DemoGrid make_demo_grid(std::uint32_t seed, int points) {
  DemoGrid grid;
  grid.seed = seed;
  grid.counts.assign(kDemoGridSize, std::vector<double>(kDemoGridSize, 0.0));

  std::minstd_rand engine(seed);
  const double span = static_cast<double>(std::minstd_rand::max() - std::minstd_rand::min());
  auto draw = [&] { return static_cast<double>(engine() - std::minstd_rand::min()) / span; };
  auto bin = [](double v) {
    return std::clamp(static_cast<int>(std::floor(v * kDemoGridSize)), 0, kDemoGridSize - 1);
  };
  for (int p = 0; p < points; ++p) {
    const double x = (draw() + draw() + draw()) / 3.0;
    const double y = 0.5 * x + 0.5 * (draw() + draw() + draw()) / 3.0;
    grid.counts[kDemoGridSize - 1 - bin(y)][bin(x)] += 1.0;
  }
  return grid;
}

std::vector<std::vector<int>> classify(const DemoGrid& grid, int classes) {
  if (classes < 1) {
    throw InvalidCountError("need at least one class");
  }
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (const auto& row : grid.counts) {
    for (double v : row) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  std::vector<std::vector<int>> out;
  for (const auto& row : grid.counts) {
    auto& dst = out.emplace_back();
    for (double v : row) {
      int k = 0;
      if (hi > lo) {
        k = std::min(classes - 1, static_cast<int>(std::floor((v - lo) / (hi - lo) * classes)));
      }
      dst.push_back(k);
    }
  }
  return out;
}

SvgDocument demoplot_heatmap(const Palette& palette, const DemoGrid& grid,
                             const std::string& title, PlotSize size) {
  if (palette.colors.size() < 2) {
    throw InvalidInputError("heatmap needs a palette with at least two colors");
  }
  if (grid.counts.empty() || grid.counts.front().empty()) {
    throw InvalidInputError("heatmap grid is empty");
  }
  constexpr double kMargin = 10, kCell = 14, kTitle = 20;
  const auto classes = classify(grid, static_cast<int>(palette.colors.size()));
  const double rows = static_cast<double>(grid.counts.size());
  const double cols = static_cast<double>(grid.counts.front().size());
  const double top = kMargin + (title.empty() ? 0 : kTitle);

  SvgWriter svg(2 * kMargin + cols * kCell, top + rows * kCell + kMargin, size);
  if (!title.empty()) {
    svg.text(kMargin + cols * kCell / 2, kMargin + 12, title, 13, "middle");
  }
  for (std::size_t r = 0; r < classes.size(); ++r) {
    for (std::size_t c = 0; c < classes[r].size(); ++c) {
      svg.rect(kMargin + static_cast<double>(c) * kCell, top + static_cast<double>(r) * kCell,
               kCell, kCell, palette.colors[static_cast<std::size_t>(classes[r][c])].text(),
               "cell");
    }
  }
  return std::move(svg).finish();
}

SvgDocument panel_grid(const std::vector<SvgDocument>& panels, int cols,
                       const std::vector<std::string>& column_titles,
                       const std::vector<std::string>& row_labels) {
  if (panels.empty() || cols < 1) {
    throw InvalidInputError("panel grid needs at least one panel and one column");
  }
  constexpr double kGap = 10, kTitle = 22, kLabel = 26;
  double pw = 0, ph = 0;
  for (const auto& p : panels) {
    pw = std::max(pw, p.width);
    ph = std::max(ph, p.height);
  }
  const int rows = static_cast<int>((panels.size() + cols - 1) / cols);
  const double left = row_labels.empty() ? 0 : kLabel;
  const double top = column_titles.empty() ? 0 : kTitle;

  SvgWriter svg(left + cols * pw + (cols - 1) * kGap, top + rows * ph + (rows - 1) * kGap);
  for (std::size_t c = 0; c < column_titles.size() && c < static_cast<std::size_t>(cols); ++c) {
    svg.text(left + static_cast<double>(c) * (pw + kGap) + pw / 2, 16, column_titles[c], 14,
             "middle");
  }
  for (std::size_t r = 0; r < row_labels.size() && r < static_cast<std::size_t>(rows); ++r) {
    const double y = top + static_cast<double>(r) * (ph + kGap) + ph / 2;
    svg.text(16, y, row_labels[r], 13, "middle", -90);
  }
  for (std::size_t k = 0; k < panels.size(); ++k) {
    const auto r = static_cast<double>(k / static_cast<std::size_t>(cols));
    const auto c = static_cast<double>(k % static_cast<std::size_t>(cols));
    svg.open_group(left + c * (pw + kGap), top + r * (ph + kGap));
    svg.raw(panels[k].text);
    svg.close_group();
  }
  return std::move(svg).finish();
}

}  // namespace colortool
