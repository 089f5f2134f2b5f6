#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "checked.hpp"
#include "components.hpp"
#include "coords.hpp"
#include "error.hpp"
#include "intersect.hpp"
#include "inversion.hpp"

// Brute-force intersection counts obtained by walking the reconstructed
// multicurve strand by strand. Nothing here depends on large.hpp.

namespace dyncurve {

struct PieceRef {
  int region = 0;
  std::size_t index = 0;

  friend bool operator==(const PieceRef&, const PieceRef&) = default;
};

/// The glued path components plus every closed strand traced through them.
struct StrandDiagram {
  GluingDescription gluing;
  std::vector<std::vector<PieceRef>> strands;  // each entry is one closed curve, in walking order

  int n() const { return gluing.n; }
  const PathComponent& piece(PieceRef ref) const {
    return gluing.region(ref.region).pieces.at(ref.index);
  }
  Int slots(int arc) const { return gluing.strands(arc); }
};

namespace detail {

inline Endpoint other_end(const PathComponent& p, Endpoint e) { return p.first == e ? p.second : p.first; }

// The piece on the far side of arc e.arc at slot e.slot, seen from `region`.
inline PieceRef across(const GluingDescription& g, int region, Endpoint e) {
  const SlotGlue& glue = g.arcs.at(static_cast<std::size_t>(e.arc - 1)).at(static_cast<std::size_t>(e.slot));
  if (region == e.arc) return {e.arc - 1, glue.from_left};
  return {e.arc, glue.from_right};
}

}  // namespace detail

inline StrandDiagram build_diagram(const ComponentProfile& p) {
  StrandDiagram d;
  d.gluing = reconstruct(p);
  const GluingDescription& g = d.gluing;

  std::vector<std::vector<char>> seen;
  for (const auto& rc : g.regions) seen.emplace_back(rc.pieces.size(), 0);

  for (int r = 0; r < static_cast<int>(g.regions.size()); ++r) {
    for (std::size_t k = 0; k < g.region(r).pieces.size(); ++k) {
      if (seen[static_cast<std::size_t>(r)][k]) continue;
      const PieceRef start{r, k};
      std::vector<PieceRef> curve;
      PieceRef cur = start;
      Endpoint entry = d.piece(start).first;
      do {
        auto& mark = seen[static_cast<std::size_t>(cur.region)][cur.index];
        if (mark) throw CurveError(ErrorKind::EndpointMismatch, "strand revisits a path component");
        mark = 1;
        curve.push_back(cur);
        const Endpoint exit = detail::other_end(d.piece(cur), entry);
        cur = detail::across(g, cur.region, exit);
        entry = exit;
      } while (!(cur == start && entry == d.piece(start).first));
      d.strands.push_back(std::move(curve));
    }
  }
  return d;
}

/// Classification of the sub-arcs of the multicurve inside a union of
/// consecutive regions, by tracing.
struct RangeCensus {
  Int arcs = 0;      // sub-arcs with endpoints on the bounding arcs
  Int above = 0;     // pass over every feature, one end on each side
  Int below = 0;     // pass under every feature, one end on each side
  Int left = 0;      // both ends on the right bounding arc, around every feature
  Int right = 0;     // both ends on the left bounding arc, around every feature

  Int disjoint() const { return above + below + left + right; }
};

/// Traces every sub-arc of the diagram inside regions lo..hi (0 is S_0, n is
/// S'_1, n+1 is S'_2). A sub-arc misses a curve tightly enclosing those
/// features exactly when it passes no crosscap and winds around every feature
/// or none: its crossings with the upward ray from each feature all have the
/// same parity.
inline RangeCensus trace_range(const StrandDiagram& d, int lo, int hi) {
  const GluingDescription& g = d.gluing;
  const int n = d.n();
  if (lo < 0 || hi > n + 1 || lo > hi) throw CurveError(ErrorKind::RangeError, "bad region range");
  RangeCensus out;

  const int left_arc = lo >= 1 ? lo : 0;
  const int right_arc = hi <= n ? hi + 1 : 0;
  std::vector<char> done_left(left_arc ? static_cast<std::size_t>(d.slots(left_arc)) : 0, 0);
  std::vector<char> done_right(right_arc ? static_cast<std::size_t>(d.slots(right_arc)) : 0, 0);
  std::vector<int> parity(static_cast<std::size_t>(hi - lo + 1));

  auto walk = [&](int arc, Int slot, bool from_left_side) {
    std::fill(parity.begin(), parity.end(), 0);
    bool core = false;
    int region = from_left_side ? arc : arc - 1;
    Endpoint entry{arc, slot};
    PieceRef cur = detail::across(g, from_left_side ? arc - 1 : arc, entry);
    for (;;) {
      const PathComponent& piece = d.piece(cur);
      switch (piece.species) {
        case Species::Above:
        case Species::LeftLoop:
        case Species::RightLoop: parity[static_cast<std::size_t>(region - lo)] ^= 1; break;
        case Species::Below: break;
        default: core = true; break;
      }
      const Endpoint exit = detail::other_end(piece, entry);
      const int next = exit.arc == region ? region - 1 : region + 1;
      if (next < lo || next > hi) {
        if (exit.arc == left_arc && next < lo) done_left[static_cast<std::size_t>(exit.slot)] = 1;
        if (exit.arc == right_arc && next > hi) done_right[static_cast<std::size_t>(exit.slot)] = 1;
        ++out.arcs;
        const bool same = std::all_of(parity.begin(), parity.end(), [&](int x) { return x == parity.front(); });
        if (core || !same) return;
        const bool start_left = from_left_side;
        const bool end_left = next < lo;
        if (start_left != end_left)
          (parity.front() ? out.above : out.below) += 1;
        else if (start_left)
          ++out.right;
        else
          ++out.left;
        return;
      }
      cur = detail::across(g, region, exit);
      region = next;
      entry = exit;
    }
  };

  if (left_arc)
    for (Int s = 0; s < d.slots(left_arc); ++s)
      if (!done_left[static_cast<std::size_t>(s)]) {
        done_left[static_cast<std::size_t>(s)] = 1;
        walk(left_arc, s, true);
      }
  if (right_arc)
    for (Int s = 0; s < d.slots(right_arc); ++s)
      if (!done_right[static_cast<std::size_t>(s)]) {
        done_right[static_cast<std::size_t>(s)] = 1;
        walk(right_arc, s, false);
      }
  return out;
}

namespace detail {

// Minimal crossings of D with the strands in S'_1 and S'_2. D meets only
// beta_{n+1}, twice, at gaps u <= w (gap g lies above slot g). Inside each of
// the two crosscap regions D is a core arc, so each piece contributes
// independently:
//   - a core piece contributes 0 when its ends interleave with D's ends on the
//     region's boundary circle and 1 otherwise;
//   - any other piece cuts off a disk, and D crosses it once per D endpoint
//     lying on that disk's side.
// Boundary circle positions are doubled: slot j of beta_{n+1} sits at 2j+1,
// gap g at 2g, and in S'_1 slot j of beta_n sits at 2m+1+2(q-1-j).
inline Int d_crossings(const StrandDiagram& d) {
  const int n = d.n();
  const Int m = d.slots(n + 1);
  const Int q = d.slots(n);
  auto pos = [&](Endpoint e) -> Int { return e.arc == n + 1 ? 2 * e.slot + 1 : 2 * m + 1 + 2 * (q - 1 - e.slot); };

  struct Cost {
    bool core;
    bool inside_is_disk;
    Int lo, hi;  // open interval of positions
  };
  std::vector<Cost> costs;
  auto add_piece = [&](const PathComponent& p) {
    Int x = pos(p.first);
    Int y = pos(p.second);
    Cost c{passes_crosscap(p.species), false, std::min(x, y), std::max(x, y)};
    // Crossing pieces of S'_1 run from beta_n to beta_{n+1}: the interval
    // between their ends contains the bottom edge. Loops enclose the crosscap
    // on the inside.
    if (p.species == Species::Below) c.inside_is_disk = true;
    costs.push_back(c);
  };
  for (const auto& p : d.gluing.region(n).pieces) add_piece(p);
  for (const auto& p : d.gluing.region(n + 1).pieces) add_piece(p);

  Int best = std::numeric_limits<Int>::max();
  for (Int u = 0; u <= m; ++u) {
    for (Int w = u; w <= m; ++w) {
      const Int pu = 2 * u;
      const Int pw = 2 * w;
      Int total = 0;
      for (const Cost& c : costs) {
        const bool iu = c.lo < pu && pu < c.hi;
        const bool iw = c.lo < pw && pw < c.hi;
        if (c.core)
          total += iu != iw ? 0 : 1;
        else if (c.inside_is_disk)
          total += Int{iu} + Int{iw};
        else
          total += Int{!iu} + Int{!iw};
        if (total >= best) break;
      }
      best = std::min(best, total);
    }
  }
  for (const NonPrimitive& np : d.gluing.nonprimitive) best = add(best, add(np.cores, twice(np.bounding)));
  return best;
}

}  // namespace detail

/// Region range whose enclosing curve is the given elementary curve.
inline std::pair<int, int> enclosed_regions(const ElementaryCurve& e, int n) {
  using K = ElementaryCurve::Kind;
  switch (e.kind) {
    case K::Cij: return {e.i - 1, e.j - 1};
    case K::Cprime1: return {e.i - 1, n};
    case K::Cprime2: return {e.i - 1, n + 1};
    case K::C: return {n, n + 1};
    default: break;
  }
  throw CurveError(ErrorKind::UnsupportedCurve, format_curve(e) + " does not enclose a range of regions");
}

inline Int count_crossings(const StrandDiagram& d, const ElementaryCurve& e) {
  if (e.nonprimitive()) throw CurveError(ErrorKind::UnsupportedCurve, "no crossing count for " + format_curve(e));
  if (!is_valid(e, d.n()))
    throw CurveError(ErrorKind::ParameterError, format_curve(e) + " is not defined for n=" + std::to_string(d.n()));
  if (e.kind == ElementaryCurve::Kind::D) return detail::d_crossings(d);
  // Non-primitive closed components sit inside a crosscap disk and miss every
  // curve of this kind.
  auto [lo, hi] = enclosed_regions(e, d.n());
  const RangeCensus census = trace_range(d, lo, hi);
  return twice(sub(census.arcs, census.disjoint()));
}

inline Int count_crossings(const DynnikovCoordinates& v, const ElementaryCurve& e) {
  return count_crossings(build_diagram(profile(invert(v))), e);
}

// ---------------------------------------------------------------------------
// Grid comparison between the closed formulas and the tracing counts.
// ---------------------------------------------------------------------------

/// Calls f on every nonzero vector with a, b, t in [-bound, bound] and c in
/// [0, bound].
inline void for_each_grid_point(int n, Int bound, const std::function<void(const DynnikovCoordinates&)>& f) {
  if (n < 2 || bound < 0) throw CurveError(ErrorKind::ParameterError, "grid needs n >= 2 and bound >= 0");
  DynnikovCoordinates v;
  v.n = n;
  v.a.assign(static_cast<std::size_t>(n - 1), -bound);
  v.b.assign(static_cast<std::size_t>(n), -bound);
  v.t = -bound;
  v.c = {0, 0};

  // Odometer over all entries.
  std::vector<Int*> digits;
  std::vector<Int> lows;
  for (auto& x : v.a) digits.push_back(&x), lows.push_back(-bound);
  for (auto& x : v.b) digits.push_back(&x), lows.push_back(-bound);
  digits.push_back(&v.t), lows.push_back(-bound);
  digits.push_back(&v.c[0]), lows.push_back(0);
  digits.push_back(&v.c[1]), lows.push_back(0);

  for (;;) {
    if (!is_zero(v)) f(v);
    std::size_t k = 0;
    while (k < digits.size() && *digits[k] == bound) {
      *digits[k] = lows[k];
      ++k;
    }
    if (k == digits.size()) return;
    ++*digits[k];
  }
}

struct Divergence {
  DynnikovCoordinates coords;
  TriangleCoordinates triangle;
  ComponentProfile profile;
  ElementaryCurve curve;
  Int formula = 0;
  Int traced = 0;
};

struct GridReport {
  Int points = 0;
  Int unrealizable = 0;
  Int comparisons = 0;
  Int divergences = 0;
  std::optional<Divergence> first;
};

/// Compares intersect_elementary with count_crossings for every in-scope
/// elementary curve at every realizable grid point.
inline GridReport compare_on_grid(int n, Int bound) {
  GridReport report;
  const std::vector<ElementaryCurve> curves = catalog(n, false);
  for_each_grid_point(n, bound, [&](const DynnikovCoordinates& v) {
    ++report.points;
    if (!is_realizable(v)) {
      ++report.unrealizable;
      return;
    }
    const TriangleCoordinates tri = invert(v);
    const ComponentProfile prof = profile(tri);
    const StrandDiagram diagram = build_diagram(prof);
    for (const ElementaryCurve& e : curves) {
      ++report.comparisons;
      const Int formula = intersect_elementary(tri, prof, e);
      const Int traced = count_crossings(diagram, e);
      if (formula != traced) {
        ++report.divergences;
        if (!report.first) report.first = Divergence{v, tri, prof, e, formula, traced};
      }
    }
  });
  return report;
}

}  // namespace dyncurve
