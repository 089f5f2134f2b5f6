#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "checked.hpp"
#include "components.hpp"
#include "error.hpp"

namespace dyncurve {

/// A union of consecutive regions starting at S_l.
///   Plain:     S_{l,m} = S_l u ... u S_m        (0 <= l <= m <= n-1)
///   Crosscap1: S'_{l,1} = S_{l,n-1} u S'_1      (0 <= l <= n)
///   Crosscap2: S'_{l,2} = S'_{l,1} u S'_2       (0 <= l <= n)
struct RegionRange {
  enum class Kind { Plain, Crosscap1, Crosscap2 };
  Kind kind = Kind::Plain;
  int l = 0;
  int m = 0;  // only meaningful for Plain

  static RegionRange plain(int l, int m) { return {Kind::Plain, l, m}; }
  static RegionRange crosscap1(int l) { return {Kind::Crosscap1, l, 0}; }
  static RegionRange crosscap2(int l) { return {Kind::Crosscap2, l, 0}; }
};

inline void check_range(const ComponentProfile& p, const RegionRange& range) {
  const int n = p.n;
  bool ok = false;
  switch (range.kind) {
    case RegionRange::Kind::Plain: ok = range.l >= 0 && range.l <= range.m && range.m <= n - 1; break;
    case RegionRange::Kind::Crosscap1:
    case RegionRange::Kind::Crosscap2: ok = range.l >= 0 && range.l <= n; break;
  }
  if (!ok) throw CurveError(ErrorKind::RangeError, "invalid region range l=" + std::to_string(range.l) +
                                                       " m=" + std::to_string(range.m) + " for n=" + std::to_string(n));
}

namespace detail {

// Counts extended with +infinity (std::nullopt): the minimum over an empty set
// of regions is unbounded, which makes single-region ranges come out uniformly.
using Bound = std::optional<Int>;

inline Bound min_b(Bound x, Bound y) {
  if (!x) return y;
  if (!y) return x;
  return std::min(*x, *y);
}

inline Bound minus_b(Bound x, Bound y) {
  if (!x) return std::nullopt;
  if (!y) throw CurveError(ErrorKind::RangeError, "finite minus unbounded count");
  return sub(*x, *y);
}

inline Int finite(Bound x) {
  if (!x) throw CurveError(ErrorKind::RangeError, "unbounded large-component count");
  return *x;
}

// A_{l,m} (above) or B_{l,m} (below) with A_{0,m} = 0 and empty ranges unbounded.
inline Bound span_min(const ComponentProfile& p, int l, int m, bool above) {
  if (l == 0) return Int{0};
  Bound out;
  for (int k = l; k <= m; ++k) {
    const auto& r = p.region(k);
    out = min_b(out, above ? r.above : r.below);
  }
  return out;
}

// A'_{l,1} or B'_{l,1}
inline Bound span_min_crosscap(const ComponentProfile& p, int l, bool above) {
  return min_b(span_min(p, l, p.n - 1, above), above ? p.cap1.above : p.cap1.below);
}

}  // namespace detail

/// (A_{l,m}, B_{l,m}): strands crossing all of S_{l,m} above resp. below the
/// punctures.
inline std::pair<Int, Int> large_over_under(const ComponentProfile& p, int l, int m) {
  check_range(p, RegionRange::plain(l, m));
  return {detail::finite(detail::span_min(p, l, m, true)), detail::finite(detail::span_min(p, l, m, false))};
}

/// (A'_{l,1}, B'_{l,1}) for S'_{l,1}.
inline std::pair<Int, Int> large_over_under_crosscap(const ComponentProfile& p, int l) {
  check_range(p, RegionRange::crosscap1(l));
  return {detail::finite(detail::span_min_crosscap(p, l, true)),
          detail::finite(detail::span_min_crosscap(p, l, false))};
}

/// Large right loops: R_{l,m}, R'_{l,1} or R'_{l,2}.
inline Int large_right(const ComponentProfile& p, const RegionRange& range) {
  using namespace detail;
  check_range(p, range);
  const int n = p.n;
  const int l = range.l;
  if (l == 0) return 0;
  switch (range.kind) {
    case RegionRange::Kind::Plain: {
      const int m = range.m;
      Bound up = minus_b(span_min(p, l, m - 1, true), span_min(p, l, m, true));
      Bound down = minus_b(span_min(p, l, m - 1, false), span_min(p, l, m, false));
      Int loops = p.region(m).side == LoopSide::Right ? p.region(m).loops : 0;
      return finite(min_b(min_b(up, down), loops));
    }
    case RegionRange::Kind::Crosscap1: {
      Bound up = minus_b(span_min(p, l, n - 1, true), span_min_crosscap(p, l, true));
      Bound down = minus_b(span_min(p, l, n - 1, false), span_min_crosscap(p, l, false));
      return finite(min_b(min_b(up, down), p.cap1.right_noncore_loops()));
    }
    case RegionRange::Kind::Crosscap2: {
      Bound m = min_b(min_b(span_min_crosscap(p, l, true), span_min_crosscap(p, l, false)), p.cap2.noncore_loops);
      return finite(m);
    }
  }
  return 0;
}

/// Large left loops: L_{l,m} or L'_{l,1}. There are none in S'_{l,2}.
///
/// At l = 0 the loops are the nested loops of S_0 around the first puncture,
/// so (-b_0)^+ is replaced by beta_1 / 2 for both range kinds.
inline Int large_left(const ComponentProfile& p, const RegionRange& range) {
  using namespace detail;
  check_range(p, range);
  const int l = range.l;
  switch (range.kind) {
    case RegionRange::Kind::Plain: {
      const int m = range.m;
      if (l == 0) return finite(min_b(min_b(span_min(p, 1, m, true), span_min(p, 1, m, false)), p.s0_loops));
      Bound up = minus_b(span_min(p, l + 1, m, true), span_min(p, l, m, true));
      Bound down = minus_b(span_min(p, l + 1, m, false), span_min(p, l, m, false));
      Int loops = p.region(l).side == LoopSide::Left ? p.region(l).loops : 0;
      return finite(min_b(min_b(up, down), loops));
    }
    case RegionRange::Kind::Crosscap1: {
      if (l >= p.n) throw CurveError(ErrorKind::RangeError, "L'_{l,1} needs l < n");
      if (l == 0)
        return finite(
            min_b(min_b(span_min_crosscap(p, 1, true), span_min_crosscap(p, 1, false)), p.s0_loops));
      Bound up = minus_b(span_min_crosscap(p, l + 1, true), span_min_crosscap(p, l, true));
      Bound down = minus_b(span_min_crosscap(p, l + 1, false), span_min_crosscap(p, l, false));
      Int loops = p.region(l).side == LoopSide::Left ? p.region(l).loops : 0;
      return finite(min_b(min_b(up, down), loops));
    }
    case RegionRange::Kind::Crosscap2: return 0;
  }
  return 0;
}

/// All large-component quantities for one starting index l and plain end m.
struct LargeComponentCounts {
  Int a_lm = 0, b_lm = 0;    // A_{l,m}, B_{l,m}
  Int ap_l1 = 0, bp_l1 = 0;  // A'_{l,1}, B'_{l,1}
  Int r_lm = 0, rp_l1 = 0, rp_l2 = 0;
  Int l_lm = 0, lp_l1 = 0;
};

inline LargeComponentCounts large_counts(const ComponentProfile& p, int l, int m) {
  check_range(p, RegionRange::plain(l, m));
  LargeComponentCounts out;
  std::tie(out.a_lm, out.b_lm) = large_over_under(p, l, m);
  std::tie(out.ap_l1, out.bp_l1) = large_over_under_crosscap(p, l);
  out.r_lm = large_right(p, RegionRange::plain(l, m));
  out.rp_l1 = large_right(p, RegionRange::crosscap1(l));
  out.rp_l2 = large_right(p, RegionRange::crosscap2(l));
  out.l_lm = large_left(p, RegionRange::plain(l, m));
  out.lp_l1 = large_left(p, RegionRange::crosscap1(l));
  return out;
}

}  // namespace dyncurve
