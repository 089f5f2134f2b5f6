#include <gtest/gtest.h>

#include <dyncurve/inversion.hpp>
#include <dyncurve/oracle.hpp>

#include "helpers.hpp"

using namespace dyncurve;

TEST(Invert, Example23) {
  const TriangleCoordinates tri = invert(parse_coords("(2; 1,0; -2; 2,0)", 2));
  EXPECT_EQ(tri.alpha, (std::vector<Int>{1, 5}));
  EXPECT_EQ(tri.beta, (std::vector<Int>{6, 4, 4}));
  EXPECT_EQ(tri.gamma, 4);
  EXPECT_EQ(tri.c, (std::array<Int, 2>{2, 0}));
}

TEST(Invert, FinalExample) {
  EXPECT_EQ(format_triangle(invert(parse_coords("(-1; 1,0; 1; 1,1)", 2))), "(3,1; 4,2,2; 4; 1,1)");
}

TEST(Invert, CurveC) {
  EXPECT_EQ(format_triangle(invert(parse_coords("(0; 0,-1; 0; 0,0)", 2))), "(0,0; 0,0,2; 2; 0,0)");
}

TEST(Invert, Intermediates) {
  const InversionIntermediates mid = inversion_intermediates(parse_coords("(2; 1,0; -2; 2,0)", 2));
  EXPECT_EQ(mid.x, 6);
  EXPECT_EQ(mid.y, 6);
  EXPECT_EQ(mid.beta_star, (std::vector<Int>{6, 4, 4}));
  EXPECT_EQ(mid.r, 0);
}

TEST(Invert, ShiftFromSecondCrosscap) {
  const auto v = parse_coords("(0; 0,0; 0; 0,1)", 2);
  const InversionIntermediates mid = inversion_intermediates(v);
  EXPECT_EQ(mid.r, 2);
  const TriangleCoordinates tri = invert(v);
  EXPECT_EQ(tri.beta, (std::vector<Int>{4, 4, 4}));
  EXPECT_EQ(coordinatize(tri), v);
}

TEST(Invert, Errors) {
  EXPECT_EQ(kind_of([] { invert(parse_coords("(0; 0,0; 0; 0,0)", 2)); }), ErrorKind::ZeroVector);
  EXPECT_EQ(kind_of([] { invert(parse_coords("(0; 0,0; 1; 0,0)", 2)); }), ErrorKind::Unrealizable);
  EXPECT_EQ(kind_of([] { invert(parse_coords("(0; 0,0; 0; 1,0)", 2)); }), ErrorKind::Unrealizable);
  DynnikovCoordinates bad = parse_coords("(0; 0,0; 0; 0,1)", 2);
  bad.b.push_back(0);
  EXPECT_EQ(kind_of([&] { invert(bad); }), ErrorKind::DimensionMismatch);
  EXPECT_EQ(kind_of([] { invert(parse_coords("(4611686018427387904; 0,0; 0; 0,0)", 2)); }), ErrorKind::Overflow);
}

TEST(Invert, Realizability) {
  EXPECT_TRUE(is_realizable(parse_coords("(2; 1,0; -2; 2,0)", 2)));
  EXPECT_FALSE(is_realizable(parse_coords("(2; 1,0; -1; 2,0)", 2)));
  EXPECT_FALSE(is_realizable(parse_coords("(0; 0,0; 0; 0,0)", 2)));
  // psi = max(c1 - |b_n|, 0) sets the required parity of t
  EXPECT_TRUE(is_realizable(parse_coords("(0; 0,1; 1; 2,0)", 2)));
  EXPECT_FALSE(is_realizable(parse_coords("(0; 0,3; 1; 2,0)", 2)));
}

TEST(Coordinatize, PaperExamples) {
  EXPECT_EQ(format_coords(coordinatize(parse_triangle("(1,5; 6,4,4; 4; 2,0)", 2))), "(2; 1,0; -2; 2,0)");
  EXPECT_EQ(format_coords(coordinatize(parse_triangle("(3,1; 4,2,2; 4; 1,1)", 2))), "(-1; 1,0; 1; 1,1)");
}

TEST(Coordinatize, PureCore) {
  EXPECT_EQ(format_coords(coordinatize(parse_triangle("(0,0; 0,0,0; 0; -1,0)", 2))), "(0; 0,0; 0; -1,0)");
}

TEST(Coordinatize, RejectsInconsistent) {
  EXPECT_EQ(kind_of([] { coordinatize(parse_triangle("(1,2; 2,2,2; 2; 0,0)", 2)); }), ErrorKind::InconsistentTriangle);
  EXPECT_EQ(kind_of([] { coordinatize(parse_triangle("(1,1; 2,1,2; 2; 0,0)", 2)); }), ErrorKind::InconsistentTriangle);
  EXPECT_EQ(kind_of([] { coordinatize(parse_triangle("(1,1; 2,2; 2; 0,0)", 3)); }), ErrorKind::DimensionMismatch);
}

TEST(Coordinatize, NegativeCRidesAlong) {
  const auto v = parse_coords("(1; 0,-1; 0; -3,-2)", 2);
  const TriangleCoordinates tri = invert(v);
  EXPECT_EQ(tri.c, v.c);
  EXPECT_EQ(coordinatize(tri), v);
}

// Property: both round trips and the output invariants on a small grid.
TEST(InversionProperty, RoundTripsAndParity) {
  for (int n = 2; n <= 3; ++n) {
    for_each_grid_point(n, 2, [&](const DynnikovCoordinates& v) {
      if (!is_realizable(v)) return;
      const TriangleCoordinates tri = invert(v);
      ASSERT_EQ(coordinatize(tri), v) << format_coords(v);
      ASSERT_EQ(invert(coordinatize(tri)), tri) << format_coords(v);
      ASSERT_EQ(half_differences(tri), v.b);
      for (Int b : tri.beta) ASSERT_EQ(b % 2, 0);
      ASSERT_EQ(tri.gamma % 2, 0);
      for (int i = 1; i <= n - 1; ++i) ASSERT_EQ((tri.alpha_at(2 * i) - tri.alpha_at(2 * i - 1)) % 2, 0);
    });
  }
}

// Where invert refuses, the unchecked formulas give an odd beta or a
// half-integer A'.
TEST(InversionProperty, UnrealizablePointsHaveNoIntegralCounts) {
  for_each_grid_point(2, 2, [&](const DynnikovCoordinates& v) {
    if (is_realizable(v)) return;
    const InversionIntermediates mid = inversion_intermediates(v);
    const Int beta_n = mid.beta_star[1] + 2 * mid.r;
    const Int beta_np1 = mid.beta_star[2] + 2 * mid.r;
    const Int psi = straight_core_count(v.c[0], v.b.back());
    const Int numerator = v.t - psi + std::max(beta_n, beta_np1) - 2 * std::abs(v.b.back());
    EXPECT_TRUE(beta_n % 2 != 0 || numerator % 2 != 0) << format_coords(v);
  });
}
