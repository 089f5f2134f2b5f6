#include <gtest/gtest.h>

#include <dyncurve/intersect.hpp>
#include <dyncurve/oracle.hpp>

#include "helpers.hpp"

using namespace dyncurve;

TEST(Curves, CatalogSizes) {
  EXPECT_EQ(catalog(2, false).size(), 1u + 2u + 1u + 2u);
  EXPECT_EQ(catalog(3, false).size(), 3u + 3u + 2u + 2u);
  EXPECT_EQ(catalog(3).size(), 14u);
  for (const auto& e : catalog(4)) EXPECT_TRUE(is_valid(e, 4)) << format_curve(e);
}

TEST(Curves, TextRoundTrip) {
  for (const auto& e : catalog(4)) EXPECT_EQ(parse_curve(format_curve(e)), e) << format_curve(e);
  EXPECT_EQ(format_curve(ElementaryCurve::cij(2, 3)), "Cij:2,3");
  EXPECT_EQ(parse_curve("Cprime2:2"), ElementaryCurve::cprime2(2));
  EXPECT_EQ(kind_of([] { parse_curve("E"); }), ErrorKind::ParameterError);
  EXPECT_EQ(kind_of([] { parse_curve("Cij:2"); }), ErrorKind::ParameterError);
  EXPECT_EQ(kind_of([] { parse_curve("Cprime1:x"); }), ErrorKind::ParameterError);
}

TEST(Curves, Validity) {
  EXPECT_FALSE(is_valid(ElementaryCurve::cij(2, 2), 3));
  EXPECT_FALSE(is_valid(ElementaryCurve::cij(1, 4), 3));
  EXPECT_FALSE(is_valid(ElementaryCurve::cprime2(1), 3));
  EXPECT_FALSE(is_valid(ElementaryCurve::core(3), 3));
}

TEST(Curves, ElementaryCoordinates) {
  EXPECT_EQ(format_coords(elementary_coords(ElementaryCurve::cprime2(2), 2)), "(0; -1,0; 0; 0,0)");
  EXPECT_EQ(format_coords(elementary_coords(ElementaryCurve::c(), 2)), "(0; 0,-1; 0; 0,0)");
  EXPECT_EQ(format_coords(elementary_coords(ElementaryCurve::d(), 2)), "(0; 0,-1; 0; 1,1)");
  EXPECT_EQ(format_coords(elementary_coords(ElementaryCurve::cij(2, 3), 3)), "(0,0; -1,1,0; 0; 0,0)");
  EXPECT_EQ(kind_of([] { elementary_coords(ElementaryCurve::cij(1, 3), 2); }), ErrorKind::ParameterError);
}

TEST(Intersect, FinalExample) {
  const auto v = parse_coords("(-1; 1,0; 1; 1,1)", 2);
  EXPECT_EQ(intersect_elementary(v, ElementaryCurve::cprime2(2)), 4);
  EXPECT_EQ(intersect_elementary(v, ElementaryCurve::c()), 2);
  EXPECT_EQ(intersect_elementary(v, ElementaryCurve::d()), 0);
}

TEST(Intersect, Errors) {
  const auto v = parse_coords("(-1; 1,0; 1; 1,1)", 2);
  EXPECT_EQ(kind_of([&] { intersect_elementary(v, ElementaryCurve::core(1)); }), ErrorKind::UnsupportedCurve);
  EXPECT_EQ(kind_of([&] { intersect_elementary(v, ElementaryCurve::bounding(2)); }), ErrorKind::UnsupportedCurve);
  EXPECT_EQ(kind_of([&] { intersect_elementary(v, ElementaryCurve::cij(1, 3)); }), ErrorKind::ParameterError);
  EXPECT_EQ(kind_of([] { intersect_elementary(parse_coords("(1; 0,-1; 0; -1,0)", 2), ElementaryCurve::c()); }),
            ErrorKind::NonprimitiveContent);
  EXPECT_EQ(kind_of([] { intersect_elementary(parse_coords("(0; 0,0; 1; 0,0)", 2), ElementaryCurve::c()); }),
            ErrorKind::Unrealizable);
}

TEST(Intersect, SelfIntersectionIsZero) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& e : catalog(n, false))
      EXPECT_EQ(intersect_elementary(elementary_coords(e, n), e), 0) << format_curve(e) << " n=" << n;
}

TEST(Intersect, PairwiseSymmetric) {
  for (int n = 2; n <= 4; ++n) {
    const auto curves = catalog(n, false);
    for (const auto& e : curves)
      for (const auto& f : curves)
        EXPECT_EQ(intersect_elementary(elementary_coords(e, n), f), intersect_elementary(elementary_coords(f, n), e))
            << format_curve(e) << " / " << format_curve(f) << " n=" << n;
  }
}

TEST(Intersect, AsPrintedDGoesNegative) {
  Int negative = 0;
  for_each_grid_point(2, 2, [&](const DynnikovCoordinates& v) {
    if (!is_realizable(v)) return;
    if (intersect_elementary(v, ElementaryCurve::d(), DFormula::AsPrinted) < 0) ++negative;
  });
  EXPECT_GT(negative, 0);
}

// Property: every count is nonnegative and the curves other than D meet the
// multicurve an even number of times.
TEST(IntersectProperty, NonnegativeAndEven) {
  for (int n = 2; n <= 3; ++n)
    for_each_grid_point(n, 2, [&](const DynnikovCoordinates& v) {
      if (!is_realizable(v)) return;
      for (const auto& e : catalog(n, false)) {
        const Int value = intersect_elementary(v, e);
        ASSERT_GE(value, 0) << format_coords(v) << " " << format_curve(e);
        if (e.kind != ElementaryCurve::Kind::D) {
          ASSERT_EQ(value % 2, 0) << format_coords(v) << " " << format_curve(e);
        }
      }
    });
}

// Property: with equal crosscap counts the traced D count is i(L, C) - 2 c1
// clamped at zero, and the clamp is actually needed somewhere.
TEST(IntersectProperty, EqualCrosscapCountsAgainstTracing) {
  Int clamped = 0;
  for_each_grid_point(2, 3, [&](const DynnikovCoordinates& v) {
    if (v.c[0] != v.c[1] || !is_realizable(v)) return;
    const Int with_c = count_crossings(v, ElementaryCurve::c());
    if (with_c < 2 * v.c[0]) ++clamped;
    ASSERT_EQ(count_crossings(v, ElementaryCurve::d()), std::max<Int>(0, with_c - 2 * v.c[0])) << format_coords(v);
    ASSERT_EQ(intersect_elementary(v, ElementaryCurve::d()), std::max<Int>(0, with_c - 2 * v.c[0]));
  });
  EXPECT_GT(clamped, 0);
}
