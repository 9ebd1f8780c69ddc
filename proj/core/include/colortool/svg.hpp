#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace colortool {

struct SvgDocument {
  std::string text;
  double width = 0;
  double height = 0;
};

// Canvas override. Zero keeps the natural size of the plot; the layout
// itself never changes, only the width/height attributes (the viewBox
// scales the drawing).
struct PlotSize {
  double width = 0;
  double height = 0;
};

// Coordinates are rounded to 0.01 and printed as the shortest decimal that
// round-trips, so identical inputs give identical bytes on every platform
// with IEEE doubles.
std::string svg_number(double value);

std::string xml_escape(std::string_view text);

// Minimal append-only SVG 1.1 builder.
class SvgWriter {
 public:
  SvgWriter(double width, double height, PlotSize size = {});

  void rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view css_class = {});
  void line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double stroke_width = 1.0, std::string_view css_class = {});
  void polyline(std::span<const std::pair<double, double>> points, std::string_view stroke,
                double stroke_width, std::string_view css_class = {});
  void circle(double cx, double cy, double r, std::string_view fill, std::string_view stroke,
              std::string_view css_class = {});
  // anchor is "start", "middle" or "end".
  void text(double x, double y, std::string_view content, double font_size = 12,
            std::string_view anchor = "start", double rotate = 0);
  void open_group(double dx, double dy);
  void close_group();
  // Appends an already rendered fragment verbatim.
  void raw(std::string_view fragment);

  SvgDocument finish() &&;

 private:
  std::string out_;
  double width_;
  double height_;
  double out_width_;
  double out_height_;
};

}  // namespace colortool
