#include <gtest/gtest.h>

#include <set>

#include <dyncurve/oracle.hpp>

#include "helpers.hpp"

using namespace dyncurve;

TEST(Oracle, DiagramSlotCounts) {
  const StrandDiagram d = build_diagram(profile(parse_triangle("(1,5; 6,4,4; 4; 2,0)", 2)));
  EXPECT_EQ(d.slots(1), 6);
  EXPECT_EQ(d.slots(2), 4);
  EXPECT_EQ(d.slots(3), 4);
}

TEST(Oracle, StrandsCoverEveryPieceOnce) {
  const StrandDiagram d = build_diagram(profile(parse_triangle("(1,5; 6,4,4; 4; 2,0)", 2)));
  std::set<std::pair<int, std::size_t>> seen;
  std::size_t total = 0;
  for (const auto& strand : d.strands)
    for (const PieceRef& r : strand) {
      EXPECT_TRUE(seen.insert({r.region, r.index}).second);
      ++total;
    }
  std::size_t pieces = 0;
  for (const auto& rc : d.gluing.regions) pieces += rc.pieces.size();
  EXPECT_EQ(total, pieces);
}

TEST(Oracle, FinalExample) {
  const auto v = parse_coords("(-1; 1,0; 1; 1,1)", 2);
  EXPECT_EQ(count_crossings(v, ElementaryCurve::cprime2(2)), 4);
  EXPECT_EQ(count_crossings(v, ElementaryCurve::c()), 2);
  EXPECT_EQ(count_crossings(v, ElementaryCurve::d()), 0);
}

TEST(Oracle, ElementaryCurvesMissThemselves) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& e : catalog(n, false))
      EXPECT_EQ(count_crossings(elementary_coords(e, n), e), 0) << format_curve(e) << " n=" << n;
}

TEST(Oracle, RangeErrors) {
  const StrandDiagram d = build_diagram(profile(parse_triangle("(1,5; 6,4,4; 4; 2,0)", 2)));
  EXPECT_EQ(kind_of([&] { trace_range(d, 2, 1); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { trace_range(d, 0, 4); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { count_crossings(d, ElementaryCurve::core(1)); }), ErrorKind::UnsupportedCurve);
}

TEST(Oracle, GridEnumeration) {
  Int points = 0;
  for_each_grid_point(2, 1, [&](const DynnikovCoordinates&) { ++points; });
  EXPECT_EQ(points, 3 * 3 * 3 * 3 * 2 * 2 - 1);
}

TEST(OracleProperty, FormulasAgreeWithTracing) {
  for (int n = 2; n <= 3; ++n) {
    const GridReport r = compare_on_grid(n, 2);
    EXPECT_GT(r.comparisons, 0);
    EXPECT_EQ(r.divergences, 0) << "n=" << n << " first at "
                                << (r.first ? format_coords(r.first->coords) + " " + format_curve(r.first->curve) : "");
  }
}

TEST(OracleProperty, Deterministic) {
  const GridReport a = compare_on_grid(2, 1);
  const GridReport b = compare_on_grid(2, 1);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.unrealizable, b.unrealizable);
  EXPECT_EQ(a.comparisons, b.comparisons);
}
