#pragma once

// Diagnostic figures rendered as SVG: swatch grids, HCL spectrum plots,
// chroma-luminance path plots and a heatmap demo.
//
// Fill colors in every figure come from the palette being shown (or, for the
// hclplot background, from the in-gamut raster). Axes and text use strokes
// and default fills only.

#include <cstdint>
#include <string>
#include <vector>

#include "colortool/palette.hpp"
#include "colortool/svg.hpp"

namespace colortool {

struct SwatchRow {
  std::string label;
  Palette palette;
};

struct SwatchSet {
  std::string title;
  std::vector<SwatchRow> rows;
};

// Layout (viewBox units): 640 wide, 10 margin, 180 label column, 24 title
// band per set, 28 per row including a 6 gap.
SvgDocument swatchplot(const std::vector<SwatchSet>& sets, PlotSize size = {});

// Per-color HCL coordinates of a palette with hue unwrapped so consecutive
// values never differ by 180 degrees or more.
struct Spectrum {
  std::vector<double> hue;
  std::vector<double> chroma;
  std::vector<double> luminance;
};

Spectrum spectrum(const Palette& palette);

// Chroma and luminance against the left axis, hue against the right axis,
// swatch strip underneath. Needs at least two colors.
SvgDocument specplot(const Palette& palette, PlotSize size = {});

struct HclCell {
  double c, l, h;  // cell center and the hue painted there
  HexCode color;
};

struct HclPath {
  std::vector<HclCell> cells;   // in-gamut background raster
  std::vector<Hcl> points;      // palette colors read back from their hex codes
  std::vector<HexCode> colors;  // the palette itself
  double chroma_axis_max = 100;
};

// Cell size of the background raster in chroma and luminance units.
inline constexpr double kHclCellSize = 2.0;

// Sequential specs only (UnsupportedKindError otherwise); n >= 2.
HclPath hcl_path(const PaletteSpec& spec, int n);
SvgDocument hclplot(const PaletteSpec& spec, int n, PlotSize size = {});

inline constexpr int kDemoGridSize = 20;
inline constexpr int kDemoGridPoints = 2000;

// 20x20 bivariate histogram of pseudo-random points. Points come from
// std::minstd_rand (a = 48271, m = 2^31 - 1) seeded with `seed`; each draw u
// maps to (u - 1) / (m - 2). A point is x = mean of 3 draws,
// y = 0.5 x + 0.5 * mean of 3 draws, binned into [0,1]^2. Row 0 is the top
// (largest y).
struct DemoGrid {
  std::uint32_t seed = 1;
  std::vector<std::vector<double>> counts;
};

DemoGrid make_demo_grid(std::uint32_t seed = 1, int points = kDemoGridPoints);

// Class index per cell: counts binned into `classes` equal-width intervals
// between min and max; a constant grid maps everything to class 0.
std::vector<std::vector<int>> classify(const DemoGrid& grid, int classes);

SvgDocument demoplot_heatmap(const Palette& palette, const DemoGrid& grid,
                             const std::string& title = {}, PlotSize size = {});

// Lays equally sized documents out on a rows x cols grid with optional
// column titles above and row labels at the left.
SvgDocument panel_grid(const std::vector<SvgDocument>& panels, int cols,
                       const std::vector<std::string>& column_titles = {},
                       const std::vector<std::string>& row_labels = {});

}  // namespace colortool
