#include <gtest/gtest.h>

#include <cmath>

#include "colortool/color.hpp"
#include "colortool/error.hpp"
#include "colortool/numfmt.hpp"

using namespace colortool;

// Expected values below come from tests/oracles/color_oracle.py.

TEST(Transfer, FixedPoints) {
  EXPECT_EQ(srgb_to_linear({0, 0, 0}), (LinearRgb{0, 0, 0}));
  const LinearRgb one = srgb_to_linear({1, 1, 1});
  EXPECT_NEAR(one.r, 1.0, 1e-15);
  EXPECT_NEAR(one.b, 1.0, 1e-15);
  const Srgb back = linear_to_srgb({1, 1, 1});
  EXPECT_NEAR(back.g, 1.0, 1e-15);
  EXPECT_EQ(linear_to_srgb({0, 0, 0}), (Srgb{0, 0, 0}));
}

TEST(Transfer, MidGray) {
  const LinearRgb lin = srgb_to_linear({0.5, 0.5, 0.5});
  EXPECT_NEAR(lin.r, 0.21404114048223255, 1e-12);
  EXPECT_NEAR(lin.g, 0.21404, 1e-5);
  const Srgb back = linear_to_srgb({0.21404, 0.21404, 0.21404});
  EXPECT_NEAR(back.b, 0.5, 1e-5);
}

TEST(Transfer, OddSymmetry) {
  EXPECT_DOUBLE_EQ(srgb_to_linear({-0.3, 0, 0}).r, -srgb_to_linear({0.3, 0, 0}).r);
  EXPECT_DOUBLE_EQ(linear_to_srgb({0, -0.002, 0}).g, -linear_to_srgb({0, 0.002, 0}).g);
}

TEST(Xyz, WhiteIsRowSums) {
  const Xyz w = linear_to_xyz({1, 1, 1});
  EXPECT_NEAR(w.x, 95.047, 0.01);
  EXPECT_NEAR(w.y, 100.0, 0.01);
  EXPECT_NEAR(w.z, 108.883, 0.01);
  EXPECT_EQ(linear_to_xyz({0, 0, 0}), (Xyz{0, 0, 0}));
}

TEST(Xyz, InverseRoundTrip) {
  const LinearRgb c{0.2, 0.7, 0.05};
  const LinearRgb back = xyz_to_linear(linear_to_xyz(c));
  EXPECT_NEAR(back.r, c.r, 1e-12);
  EXPECT_NEAR(back.g, c.g, 1e-12);
  EXPECT_NEAR(back.b, c.b, 1e-12);
}

TEST(Luv, WhiteAndBlack) {
  const Luv w = xyz_to_luv({kD65.xn, kD65.yn, kD65.zn});
  EXPECT_NEAR(w.l, 100.0, 1e-9);
  EXPECT_NEAR(w.u, 0.0, 1e-9);
  EXPECT_NEAR(w.v, 0.0, 1e-9);
  EXPECT_EQ(xyz_to_luv({0, 0, 0}), (Luv{0, 0, 0}));
  EXPECT_EQ(luv_to_xyz({0, 0, 0}), (Xyz{0, 0, 0}));
}

TEST(Luv, PureRed) {
  const Luv red = xyz_to_luv(linear_to_xyz({1, 0, 0}));
  EXPECT_NEAR(red.l, 53.24079183, 1e-6);
  EXPECT_NEAR(red.u, 175.01503305, 1e-6);
  EXPECT_NEAR(red.v, 37.75642027, 1e-6);
}

TEST(Hcl, PolarAxes) {
  EXPECT_EQ(luv_to_hcl({50, 10, 0}), (Hcl{0, 10, 50}));
  const Hcl v = luv_to_hcl({50, 0, 10});
  EXPECT_NEAR(v.h, 90.0, 1e-12);
  EXPECT_NEAR(v.c, 10.0, 1e-12);
  EXPECT_EQ(luv_to_hcl({50, 0, 0}), (Hcl{0, 0, 50}));
}

TEST(Hcl, NegativeHueWraps) {
  const Luv a = hcl_to_luv({-90, 20, 50});
  const Luv b = hcl_to_luv({270, 20, 50});
  EXPECT_NEAR(a.u, b.u, 1e-12);
  EXPECT_NEAR(a.v, b.v, 1e-12);
}

TEST(Hsv, Examples) {
  EXPECT_EQ(hsv_to_srgb({0, 1, 1}), (Srgb{1, 0, 0}));
  EXPECT_EQ(hsv_to_srgb({240, 1, 1}), (Srgb{0, 0, 1}));
  const Srgb y = hsv_to_srgb({60, 0.5, 1});
  EXPECT_NEAR(y.r, 1.0, 1e-12);
  EXPECT_NEAR(y.g, 1.0, 1e-12);
  EXPECT_NEAR(y.b, 0.5, 1e-12);
  const Hsv back = srgb_to_hsv({1, 1, 0.5});
  EXPECT_NEAR(back.h, 60, 1e-12);
  EXPECT_NEAR(back.s, 0.5, 1e-12);
  EXPECT_NEAR(back.v, 1, 1e-12);
}

TEST(Hex, ParseAndFormat) {
  EXPECT_EQ(parse_hex("#FF0000"), (Srgb{1, 0, 0}));
  EXPECT_EQ(parse_hex("#ff0000"), (Srgb{1, 0, 0}));
  EXPECT_EQ(format_hex({1, 1, 1}).text(), "#FFFFFF");
  EXPECT_EQ(format_hex(parse_hex("#4B0055")).text(), "#4B0055");
  EXPECT_EQ(HexCode::parse("#4b0055").text(), "#4B0055");
}

TEST(Hex, ParseErrorsReportPosition) {
  try {
    parse_hex("#12G456");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_hex("123456"), ParseError);
  EXPECT_THROW(parse_hex("#12345"), ParseError);
  EXPECT_THROW(parse_hex("#1234567"), ParseError);
}

TEST(Hex, FormatRejectsOutOfRange) {
  EXPECT_THROW(format_hex({1.01, 0, 0}), InvalidColorError);
  EXPECT_THROW(format_hex({0, -0.01, 0}), InvalidColorError);
  EXPECT_EQ(format_hex({1.001, 0, -0.001}).text(), "#FF0000");
}

TEST(Gamut, Fixup) {
  EXPECT_EQ(fixup_gamut({1.2, 0.5, -0.1}), (Srgb{1, 0.5, 0}));
  EXPECT_EQ(fixup_gamut({0.3, 0.3, 0.3}), (Srgb{0.3, 0.3, 0.3}));
}

TEST(Gamut, DarkGreenExceedsGamut) {
  const Srgb raw = hcl_to_srgb({120, 90, 15});
  EXPECT_NEAR(raw.r, -0.1525487, 1e-6);
  EXPECT_NEAR(raw.g, 0.20962179, 1e-6);
  EXPECT_NEAR(raw.b, -0.20462521, 1e-6);
  EXPECT_FALSE(in_gamut(raw));
  const Srgb fixed = fixup_gamut(raw);
  EXPECT_TRUE(in_gamut(fixed));
}

TEST(Gamut, MaxChroma) {
  EXPECT_EQ(max_chroma(120, 0), 0.0);
  EXPECT_EQ(max_chroma(120, 100), 0.0);
  const double c = max_chroma(120, 50);
  EXPECT_TRUE(in_gamut(hcl_to_srgb({120, c - 1e-6, 50})));
  EXPECT_FALSE(in_gamut(hcl_to_srgb({120, c + 0.01, 50})));
}

TEST(NumFmt, Formatting) {
  EXPECT_EQ(format_number(1.1), "1.1");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(300), "300");
  EXPECT_EQ(format_fixed(21.0, 2), "21.00");
  EXPECT_EQ(format_fixed(-0.00001, 4), "0.0000");
}

TEST(NumFmt, Parsing) {
  EXPECT_EQ(parse_number("2/3").value(), 2.0 / 3.0);
  EXPECT_EQ(parse_number("+1.5").value(), 1.5);
  EXPECT_EQ(parse_number("-180").value(), -180.0);
  EXPECT_FALSE(parse_number("1.5x"));
  EXPECT_FALSE(parse_number(""));
  EXPECT_FALSE(parse_number("1/0"));
}
