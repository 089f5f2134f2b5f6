#include <gtest/gtest.h>

#include <dyncurve/inversion.hpp>
#include <dyncurve/large.hpp>
#include <dyncurve/oracle.hpp>

#include "helpers.hpp"

using namespace dyncurve;

namespace {

ComponentProfile example23() { return profile(parse_triangle("(1,5; 6,4,4; 4; 2,0)", 2)); }
ComponentProfile final_example() { return profile(parse_triangle("(3,1; 4,2,2; 4; 1,1)", 2)); }

}  // namespace

TEST(Large, Example23FromFirstRegion) {
  const LargeComponentCounts c = large_counts(example23(), 1, 1);
  EXPECT_EQ(c.a_lm, 0);
  EXPECT_EQ(c.b_lm, 4);
  EXPECT_EQ(c.ap_l1, 0);
  EXPECT_EQ(c.bp_l1, 2);
  EXPECT_EQ(c.r_lm, 1);
  EXPECT_EQ(c.rp_l1, 0);
  EXPECT_EQ(c.rp_l2, 0);
  EXPECT_EQ(c.l_lm, 0);
  EXPECT_EQ(c.lp_l1, 0);
}

TEST(Large, Example23FromOuterRegion) {
  const LargeComponentCounts c = large_counts(example23(), 0, 0);
  EXPECT_EQ(c.a_lm, 0);
  EXPECT_EQ(c.b_lm, 0);
  EXPECT_EQ(c.r_lm, 0);
  EXPECT_EQ(c.l_lm, 3);
  EXPECT_EQ(c.lp_l1, 0);
}

TEST(Large, FinalExample) {
  const ComponentProfile p = final_example();
  EXPECT_EQ(large_over_under(p, 1, 1), (std::pair<Int, Int>{2, 0}));
  EXPECT_EQ(large_over_under_crosscap(p, 1), (std::pair<Int, Int>{1, 0}));
  EXPECT_EQ(large_right(p, RegionRange::crosscap2(2)), 0);
}

TEST(Large, RangeErrors) {
  const ComponentProfile p = example23();
  EXPECT_EQ(kind_of([&] { large_over_under(p, 1, 2); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { large_over_under(p, 1, 0); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { large_over_under_crosscap(p, 3); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { large_left(p, RegionRange::crosscap1(2)); }), ErrorKind::RangeError);
  EXPECT_EQ(kind_of([&] { large_counts(p, -1, 0); }), ErrorKind::RangeError);
  EXPECT_NO_THROW(large_right(p, RegionRange::crosscap2(2)));
  EXPECT_EQ(large_left(p, RegionRange::crosscap2(1)), 0);
}

// Property: on plain ranges away from S_0 the closed-form counts equal the
// traced classification of sub-arcs.
TEST(LargeProperty, MatchesTracedCensus) {
  for (int n = 2; n <= 3; ++n) {
    for_each_grid_point(n, 2, [&](const DynnikovCoordinates& v) {
      if (!is_realizable(v) || v.c[0] < 0 || v.c[1] < 0) return;
      const ComponentProfile p = profile(v);
      const StrandDiagram d = build_diagram(p);
      for (int l = 1; l <= n - 1; ++l)
        for (int m = l; m <= n - 1; ++m) {
          const RangeCensus census = trace_range(d, l, m);
          const auto [above, below] = large_over_under(p, l, m);
          const Int large = above + below + large_right(p, RegionRange::plain(l, m)) +
                            large_left(p, RegionRange::plain(l, m));
          ASSERT_EQ(large, census.disjoint()) << format_coords(v) << " l=" << l << " m=" << m;
        }
    });
  }
}

// Property: widening a range never adds strands that pass over or under all of it.
TEST(LargeProperty, MonotoneInRange) {
  for_each_grid_point(3, 2, [&](const DynnikovCoordinates& v) {
    if (!is_realizable(v)) return;
    const ComponentProfile p = profile(v);
    for (int l = 0; l <= 2; ++l) {
      const auto [a1, b1] = large_over_under(p, l, std::max(l, 1));
      const auto [a2, b2] = large_over_under(p, l, 2);
      ASSERT_LE(a2, a1);
      ASSERT_LE(b2, b1);
      const auto [ap, bp] = large_over_under_crosscap(p, l);
      ASSERT_LE(ap, a2);
      ASSERT_LE(bp, b2);
      for (auto range : {RegionRange::plain(l, 2), RegionRange::crosscap1(l), RegionRange::crosscap2(l)})
        ASSERT_GE(large_right(p, range), 0);
    }
  });
}
