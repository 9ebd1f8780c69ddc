#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "colortool/cvd.hpp"
#include "colortool/error.hpp"
#include "colortool/ops.hpp"
#include "colortool/palette.hpp"

using namespace colortool;

namespace {

std::vector<HexCode> hexes(std::initializer_list<const char*> list) {
  std::vector<HexCode> out;
  for (const char* s : list) out.push_back(HexCode::parse(s));
  return out;
}

int channel_spread(const HexCode& c) {
  const Srgb s = c.to_srgb();
  const int r = static_cast<int>(std::lround(s.r * 255));
  const int g = static_cast<int>(std::lround(s.g * 255));
  const int b = static_cast<int>(std::lround(s.b * 255));
  return std::max({r, g, b}) - std::min({r, g, b});
}

int max_step(const HexCode& a, const HexCode& b) {
  const Srgb x = a.to_srgb(), y = b.to_srgb();
  return static_cast<int>(std::lround(
      255 * std::max({std::fabs(x.r - y.r), std::fabs(x.g - y.g), std::fabs(x.b - y.b)})));
}

double hue_distance(double a, double b) {
  const double d = std::fmod(std::fabs(a - b), 360.0);
  return std::min(d, 360.0 - d);
}

}  // namespace

TEST(CvdTables, ChecksumGuardsConstants) { EXPECT_EQ(cvd_table_checksum(), kCvdTableChecksum); }

TEST(CvdTables, SeverityZeroIsIdentity) {
  for (CvdKind kind : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan}) {
    const Matrix3 m = cvd_matrix(kind, 0.0);
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) EXPECT_EQ(m[r][c], r == c ? 1.0 : 0.0);
    }
  }
}

TEST(CvdTables, RowsSumToOne) {
  for (CvdKind kind : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan}) {
    for (const Matrix3& m : cvd_table(kind)) {
      for (const auto& row : m) EXPECT_NEAR(row[0] + row[1] + row[2], 1.0, 1e-3);
    }
  }
}

TEST(CvdTables, Interpolation) {
  const Matrix3 m = cvd_matrix(CvdKind::deutan, 0.55);
  const auto& t = cvd_table(CvdKind::deutan);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(m[r][c], 0.5 * t[5][r][c] + 0.5 * t[6][r][c], 1e-12);
  }
  EXPECT_EQ(cvd_matrix(CvdKind::protan, 0.3), cvd_table(CvdKind::protan)[3]);
  EXPECT_THROW(cvd_matrix(CvdKind::deutan, 1.5), InvalidSeverityError);
  EXPECT_THROW(cvd_matrix(CvdKind::deutan, -0.1), InvalidSeverityError);
}

TEST(Simulate, IdentityAtSeverityZero) {
  const auto colors = rainbow_hsv(7, 0, 2.0 / 3.0, true).colors;
  EXPECT_EQ(simulate_cvd(colors, CvdKind::deutan, 0.0), colors);
}

TEST(Simulate, WhiteStaysWhite) {
  const auto white = hexes({"#FFFFFF"});
  for (CvdKind kind : {CvdKind::deutan, CvdKind::protan, CvdKind::tritan}) {
    for (double s : {0.25, 0.5, 1.0}) {
      EXPECT_LE(max_step(simulate_cvd(white, kind, s)[0], white[0]), 1);
    }
  }
}

TEST(Simulate, RedGreenCollapse) {
  const auto rg = hexes({"#FF0000", "#00FF00"});
  const auto out = simulate_cvd(rg, CvdKind::deutan, 1.0);
  EXPECT_EQ(out[0].text(), "#A39000");
  EXPECT_EQ(out[1].text(), "#EFD63A");
  EXPECT_GE(hue_distance(hex_to_hcl(rg[0]).h, hex_to_hcl(rg[1]).h), 100.0);
  EXPECT_LT(hue_distance(hex_to_hcl(out[0]).h, hex_to_hcl(out[1]).h), 25.0);
}

TEST(Simulate, DeutanRainbow) {
  std::vector<std::string> got;
  for (const auto& c : simulate_cvd(rainbow_hsv(7, 0, 2.0 / 3.0, true).colors, CvdKind::deutan, 1))
    got.push_back(c.text());
  EXPECT_EQ(got, (std::vector<std::string>{"#003DFB", "#6099FD", "#E3D9B0", "#EFD63A", "#FFE537",
                                           "#DCC411", "#A39000"}));
}

TEST(Desaturate, Examples) {
  const auto red = hexes({"#FF0000"});
  EXPECT_LE(max_step(desaturate(red, 0.0)[0], red[0]), 1);
  EXPECT_LE(channel_spread(desaturate(red, 1.0)[0]), 1);
  const auto colors = rainbow_hsv(7).colors;
  const auto once = desaturate(colors, 1.0);
  EXPECT_EQ(desaturate(once, 1.0), once);
  EXPECT_THROW(desaturate(colors, 1.5), InvalidInputError);
}

TEST(AdjustLuminance, Extremes) {
  const auto colors = hexes({"#4B0055", "#00FF00", "#777777"});
  for (const auto& c : adjust_luminance(colors, 1.0)) EXPECT_EQ(c.text(), "#FFFFFF");
  for (const auto& c : adjust_luminance(colors, -1.0)) EXPECT_EQ(c.text(), "#000000");
  const auto same = adjust_luminance(colors, 0.0);
  for (std::size_t k = 0; k < colors.size(); ++k) EXPECT_LE(max_step(same[k], colors[k]), 1);
  EXPECT_THROW(adjust_luminance(colors, 2.0), InvalidInputError);
}

TEST(Contrast, Wcag) {
  const auto c = hexes({"#FFFFFF", "#000000", "#FF0000", "#777777"});
  EXPECT_DOUBLE_EQ(relative_luminance(c[0]), 1.0);
  EXPECT_DOUBLE_EQ(relative_luminance(c[1]), 0.0);
  EXPECT_NEAR(relative_luminance(c[2]), 0.2126, 1e-4);
  EXPECT_NEAR(contrast_ratio(c[0], c[1]), 21.0, 1e-9);
  EXPECT_EQ(contrast_ratio(c[0], c[1]), contrast_ratio(c[1], c[0]));
  EXPECT_DOUBLE_EQ(contrast_ratio(c[2], c[2]), 1.0);
  EXPECT_NEAR(contrast_ratio(c[3], c[0]), 4.478089453577214, 1e-9);
}

TEST(LuminanceProfile, MonotoneAndNot) {
  const auto profile = luminance_profile(
      hexes({"#2D3184", "#0076A1", "#32AAB5", "#77CFBE", "#B3E7C5", "#DFF1D0", "#F3F1E4"}));
  EXPECT_TRUE(profile.monotone);
  EXPECT_NEAR(profile.luminance.front(), 25.0138, 1e-4);
  EXPECT_FALSE(luminance_profile(rainbow_hsv(7, 0, 2.0 / 3.0, true).colors).monotone);
}

TEST(ParseHexList, ReportsIndex) {
  const std::vector<std::string> list{"#FFFFFF", "#GG0000"};
  try {
    parse_hex_list(list);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("color 1"), std::string::npos);
  }
}
