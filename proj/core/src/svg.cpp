#include "colortool/svg.hpp"

#include <cmath>

#include "colortool/numfmt.hpp"

namespace colortool {
namespace {

void attr(std::string& out, std::string_view name, std::string_view value) {
  out += ' ';
  out += name;
  out += "=\"";
  out += value;
  out += '"';
}

void attr(std::string& out, std::string_view name, double value) {
  attr(out, name, svg_number(value));
}

}  // namespace

std::string svg_number(double value) {
  return format_number(std::round(value * 100.0) / 100.0);
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

SvgWriter::SvgWriter(double width, double height, PlotSize size)
    : width_(width),
      height_(height),
      out_width_(size.width > 0 ? size.width : width),
      out_height_(size.height > 0 ? size.height : height) {
  out_ = "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\"";
  attr(out_, "width", out_width_);
  attr(out_, "height", out_height_);
  attr(out_, "viewBox", "0 0 " + svg_number(width_) + " " + svg_number(height_));
  attr(out_, "font-family", "Helvetica, Arial, sans-serif");
  out_ += ">\n";
}

void SvgWriter::rect(double x, double y, double w, double h, std::string_view fill,
                     std::string_view css_class) {
  out_ += "<rect";
  if (!css_class.empty()) attr(out_, "class", css_class);
  attr(out_, "x", x);
  attr(out_, "y", y);
  attr(out_, "width", w);
  attr(out_, "height", h);
  attr(out_, "fill", fill);
  out_ += "/>\n";
}

void SvgWriter::line(double x1, double y1, double x2, double y2, std::string_view stroke,
                     double stroke_width, std::string_view css_class) {
  out_ += "<line";
  if (!css_class.empty()) attr(out_, "class", css_class);
  attr(out_, "x1", x1);
  attr(out_, "y1", y1);
  attr(out_, "x2", x2);
  attr(out_, "y2", y2);
  attr(out_, "stroke", stroke);
  attr(out_, "stroke-width", stroke_width);
  out_ += "/>\n";
}

void SvgWriter::polyline(std::span<const std::pair<double, double>> points,
                         std::string_view stroke, double stroke_width,
                         std::string_view css_class) {
  std::string coords;
  for (const auto& [x, y] : points) {
    if (!coords.empty()) coords += ' ';
    coords += svg_number(x);
    coords += ',';
    coords += svg_number(y);
  }
  out_ += "<polyline";
  if (!css_class.empty()) attr(out_, "class", css_class);
  attr(out_, "points", coords);
  attr(out_, "fill", "none");
  attr(out_, "stroke", stroke);
  attr(out_, "stroke-width", stroke_width);
  out_ += "/>\n";
}

void SvgWriter::circle(double cx, double cy, double r, std::string_view fill,
                       std::string_view stroke, std::string_view css_class) {
  out_ += "<circle";
  if (!css_class.empty()) attr(out_, "class", css_class);
  attr(out_, "cx", cx);
  attr(out_, "cy", cy);
  attr(out_, "r", r);
  attr(out_, "fill", fill);
  attr(out_, "stroke", stroke);
  out_ += "/>\n";
}

void SvgWriter::text(double x, double y, std::string_view content, double font_size,
                     std::string_view anchor, double rotate) {
  out_ += "<text";
  attr(out_, "x", x);
  attr(out_, "y", y);
  attr(out_, "font-size", font_size);
  if (anchor != "start") attr(out_, "text-anchor", anchor);
  if (rotate != 0) {
    attr(out_, "transform",
         "rotate(" + svg_number(rotate) + " " + svg_number(x) + " " + svg_number(y) + ")");
  }
  out_ += '>';
  out_ += xml_escape(content);
  out_ += "</text>\n";
}

void SvgWriter::open_group(double dx, double dy) {
  out_ += "<g";
  attr(out_, "transform", "translate(" + svg_number(dx) + " " + svg_number(dy) + ")");
  out_ += ">\n";
}

void SvgWriter::close_group() { out_ += "</g>\n"; }

void SvgWriter::raw(std::string_view fragment) { out_ += fragment; }

SvgDocument SvgWriter::finish() && {
  out_ += "</svg>\n";
  return {std::move(out_), out_width_, out_height_};
}

}  // namespace colortool
