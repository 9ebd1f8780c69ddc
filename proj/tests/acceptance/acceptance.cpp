// Acceptance suite: one PASS/FAIL line per top-level criterion.
//
// Exit status is 0 when every criterion passes, except those named in
// expected_failures.txt, which must fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "colortool/cvd.hpp"
#include "colortool/numfmt.hpp"
#include "colortool/ops.hpp"
#include "colortool/plots.hpp"
#include "colortool/registry.hpp"
#include "figures.hpp"
#include "svg_inspect.hpp"

using namespace colortool;
using namespace colortool::testkit;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail.clear();
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

double hue_gap(double a, double b) {
  const double d = std::fmod(std::fabs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

Verdict round_trip() {
  Verdict v;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double worst = 0;
  const auto start = std::chrono::steady_clock::now();
  for (int k = 0; k < 1000; ++k) {
    const Srgb c{u(rng), u(rng), u(rng)};
    const Hcl hcl = luv_to_hcl(xyz_to_luv(linear_to_xyz(srgb_to_linear(c))));
    const Srgb back = linear_to_srgb(xyz_to_linear(luv_to_xyz(hcl_to_luv(hcl))));
    worst = std::max({worst, std::fabs(back.r - c.r), std::fabs(back.g - c.g), std::fabs(back.b - c.b)});
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  v.require(worst <= 1e-6, "max channel error " + format_number(worst));
  v.require(seconds < 1.0, "runtime " + format_number(seconds) + " s");
  if (v.pass) {
    v.detail = "1000 colors, max error " + format_number(worst) + ", " +
               format_fixed(seconds * 1000, 2) + " ms";
  }
  return v;
}

Verdict viridis_endpoints() {
  Verdict v;
  const auto colors = sample(Registry::builtin().get("viridis"), 7).colors;
  const HexCode first = format_hex(fixup_gamut(hcl_to_srgb({300, 40, 15})));
  const HexCode last = format_hex(fixup_gamut(hcl_to_srgb({75, 95, 90})));
  v.require(colors.size() == 7, "expected 7 colors");
  v.require(colors.front() == first, "first " + colors.front().text() + " != " + first.text());
  v.require(colors.back() == last, "last " + colors.back().text() + " != " + last.text());
  // Values from the independent numpy oracle.
  v.require(first.text() == "#4B0055" && last.text() == "#FDE333", "oracle hex mismatch");
  if (v.pass) v.detail = colors.front().text() + " ... " + colors.back().text();
  return v;
}

Verdict triangular_chroma() {
  Verdict v;
  SpecOverrides o;
  o.cmax = 90;
  o.c2 = 20;
  const auto path = trajectory(Registry::builtin().get("viridis", o), 1001);
  double peak = 0;
  for (const auto& p : path) peak = std::max(peak, p.c);
  v.require(path.front().c == 40.0, "first chroma " + format_number(path.front().c));
  v.require(path.back().c == 20.0, "last chroma " + format_number(path.back().c));
  v.require(std::fabs(peak - 90.0) <= 1e-9,
            "max chroma over 1001 points is " + format_fixed(peak, 6) +
                " (peak lies at i = 7/12, between grid points)");
  if (v.pass) v.detail = "endpoints 40/20, max " + format_number(peak);
  return v;
}

Verdict monotone_luminance() {
  Verdict v;
  const CliResult by = cli({"palette", "--kind", "sequential", "--name", "Blue-Yellow", "-n", "7"});
  const CliResult rb = cli({"palette", "--kind", "rainbow", "-n", "7", "--start", "0", "--end", "2/3"});
  std::vector<std::string> a{"assess", "monotone-luminance"}, b = a;
  for (const auto& l : split_lines(by.out)) a.push_back(l);
  for (const auto& l : split_lines(rb.out)) b.push_back(l);
  const CliResult ra = cli(a), rr = cli(b);
  v.require(ra.code == 0 && rr.code == 0, "assess exited non-zero");
  const auto la = split_lines(ra.out), lr = split_lines(rr.out);
  v.require(!la.empty() && la[0] == "yes", "Blue-Yellow not reported monotone");
  v.require(!lr.empty() && lr[0] == "no", "rainbow reported monotone");
  if (v.pass) v.detail = "Blue-Yellow L = " + la.at(1) + "; rainbow L = " + lr.at(1);
  return v;
}

Verdict cvd() {
  Verdict v;
  for (CvdKind kind : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan}) {
    const Matrix3 zero = cvd_matrix(kind, 0.0);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        v.require(zero[r][c] == (r == c ? 1.0 : 0.0), "severity-0 matrix is not the identity");
      }
    }
    for (const Matrix3& m : cvd_table(kind)) {
      for (const auto& row : m) {
        v.require(std::fabs(row[0] + row[1] + row[2] - 1.0) <= 1e-3, "row sum differs from 1");
      }
    }
  }
  v.require(cvd_table_checksum() == kCvdTableChecksum, "matrix table checksum changed");

  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> byte(0, 255);
  std::vector<HexCode> colors = rainbow_hsv(7).colors;
  for (int k = 0; k < 500; ++k) {
    colors.push_back(format_hex({byte(rng) / 255.0, byte(rng) / 255.0, byte(rng) / 255.0}));
  }
  v.require(simulate_cvd(colors, CvdKind::deutan, 0.0) == colors, "severity 0 changed colors");

  const std::vector<HexCode> rg{HexCode::parse("#FF0000"), HexCode::parse("#00FF00")};
  const auto sim = simulate_cvd(rg, CvdKind::deutan, 1.0);
  const double before = hue_gap(hex_to_hcl(rg[0]).h, hex_to_hcl(rg[1]).h);
  const double after = hue_gap(hex_to_hcl(sim[0]).h, hex_to_hcl(sim[1]).h);
  v.require(before >= 100.0, "original separation " + format_number(before));
  v.require(after < 25.0, "simulated separation " + format_fixed(after, 2));
  if (v.pass) {
    v.detail = "hue separation " + format_fixed(before, 2) + " -> " + format_fixed(after, 2) +
               " deg (" + sim[0].text() + ", " + sim[1].text() + ")";
  }
  return v;
}

Verdict desaturation() {
  Verdict v;
  int worst = 0;
  for (const HexCode& c : desaturate(rainbow_hsv(7).colors, 1.0)) {
    const Srgb s = c.to_srgb();
    const long r = std::lround(s.r * 255), g = std::lround(s.g * 255), b = std::lround(s.b * 255);
    worst = std::max(worst, static_cast<int>(std::max({r, g, b}) - std::min({r, g, b})));
  }
  v.require(worst <= 1, "channel spread " + std::to_string(worst));
  if (v.pass) v.detail = "max channel spread " + std::to_string(worst);
  return v;
}

Verdict contrast() {
  Verdict v;
  const HexCode white = HexCode::parse("#FFFFFF"), black = HexCode::parse("#000000");
  const double r = contrast_ratio(white, black);
  v.require(std::fabs(r - 21.0) <= 1e-9, "white/black ratio " + format_number(r));
  v.require(contrast_ratio(black, white) == r, "not symmetric");
  const HexCode mid = HexCode::parse("#4B0055");
  v.require(contrast_ratio(mid, mid) == 1.0, "self ratio is not 1");
  if (v.pass) v.detail = "white/black " + format_fixed(r, 2);
  return v;
}

Verdict figures() {
  Verdict v;
  const auto first = all_figures();
  const auto second = all_figures();
  for (std::size_t k = 0; k < first.size(); ++k) {
    const Figure& f = first[k];
    v.require(f.doc.text == second[k].doc.text, f.name + " differs between runs");
    v.require(well_formed(f.doc.text), f.name + " is not well-formed XML");
    std::string golden;
    try {
      golden = read_file(golden_dir() + "/" + f.name + ".svg");
    } catch (const std::exception& e) {
      v.require(false, e.what());
      continue;
    }
    v.require(golden == f.doc.text, f.name + " differs from its golden file");
  }

  const std::string& swatches = first[0].doc.text;
  v.require(count_elements(swatches, "rect", "swatch") == 28, "swatch grid needs 4x7 swatches");

  const std::string& spec = first[1].doc.text;
  const Spectrum s = spectrum(sample(viridis_h200(), 7));
  v.require(std::fabs(s.hue.front() - 200) <= 10 && std::fabs(s.hue.back() - 75) <= 2,
            "spectrum hue runs " + format_fixed(s.hue.front(), 1) + " -> " +
                format_fixed(s.hue.back(), 1));
  const auto hue = polyline_points(spec, "hue");
  v.require(hue.size() == 7 && hue.front().second < hue.back().second,
            "hue polyline does not fall from start to end");

  const std::string& path = first[2].doc.text;
  v.require(count_elements(path, "circle", "point") == 7, "path plot needs 7 points");
  v.require(polyline_points(path, "path").size() == 7, "path polyline needs 7 vertices");

  const std::string& heatmaps = first[3].doc.text;
  v.require(count_elements(heatmaps, "svg") == 7, "heatmap grid needs 6 nested panels");
  v.require(count_elements(heatmaps, "rect", "cell") == 6 * kDemoGridSize * kDemoGridSize,
            "heatmap grid cell count");
  if (v.pass) {
    v.detail = "4 figures byte-identical to golden files; hue " + format_fixed(s.hue.front(), 1) +
               " -> " + format_fixed(s.hue.back(), 1);
  }
  return v;
}

Verdict cli_contract() {
  Verdict v;
  const CliResult a = cli({"palette", "--kind", "sequential", "--name", "viridis", "-n", "7"});
  const auto lines = split_lines(a.out);
  v.require(a.code == 0, "palette exit " + std::to_string(a.code));
  v.require(lines.size() == 7, "palette printed " + std::to_string(lines.size()) + " lines");
  for (const auto& l : lines) {
    v.require(l.size() == 7 && l[0] == '#' && HexCode::parse(l).text() == l, "bad hex line " + l);
  }
  v.require(a.err.empty(), "palette wrote to stderr");

  const CliResult b = cli({"assess", "contrast", "'#FFFFFF'", "'#000000'"});
  v.require(b.code == 0 && b.out == "21.00\n", "contrast printed \"" + b.out + "\"");
  v.require(b.err.empty(), "contrast wrote to stderr");

  const CliResult c = cli({"palette", "--kind", "sequential", "--name", "nosuch"});
  v.require(c.code == 1, "unknown palette exit " + std::to_string(c.code));
  v.require(c.out.empty(), "unknown palette wrote to stdout");
  v.require(c.err.find("did you mean") != std::string::npos, "no suggestion on stderr");

  const CliResult d = cli({"palette", "--no-such-flag"});
  v.require(d.code == 2 && d.out.empty() && !d.err.empty(), "usage error contract");
  if (v.pass) v.detail = "3 documented invocations and a usage error behave as documented";
  return v;
}

std::set<std::string> expected_failures() {
  std::set<std::string> out;
  std::ifstream in(COLORTOOL_EXPECTED_FAILURES);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.insert(line);
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"round-trip", round_trip},
      {"viridis-endpoints", viridis_endpoints},
      {"triangular-chroma", triangular_chroma},
      {"monotone-luminance", monotone_luminance},
      {"cvd-identity-collapse", cvd},
      {"desaturation-grayness", desaturation},
      {"contrast", contrast},
      {"figure-reproduction", figures},
      {"cli-contract", cli_contract},
  };
  const auto expected = expected_failures();
  int unexpected = 0, passed = 0;
  for (const auto& [name, check] : criteria) {
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const bool known = expected.count(name) > 0;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << name << ": " << v.detail;
    if (!v.pass && known) std::cout << " [expected failure]";
    if (v.pass && known) std::cout << " [unexpected pass; update expected_failures.txt]";
    std::cout << '\n';
    passed += v.pass;
    if (v.pass == known) ++unexpected;
  }
  std::cout << passed << "/" << criteria.size() << " criteria pass, " << unexpected
            << " unexpected result(s)\n";
  return unexpected == 0 ? 0 : 1;
}
