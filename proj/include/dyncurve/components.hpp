#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <string>
#include <vector>

#include "checked.hpp"
#include "coords.hpp"
#include "error.hpp"

namespace dyncurve {

enum class LoopSide { None, Left, Right };

/// Whole non-primitive components around one crosscap.
struct NonPrimitive {
  Int cores = 0;     // copies of the core curve c_k (0 or 1)
  Int bounding = 0;  // parallel copies of the bounding curve d_k

  friend bool operator==(const NonPrimitive&, const NonPrimitive&) = default;
};

/// Decodes a negative c entry: -1 -> core, -2m -> m bounding, -2m-1 -> both.
/// Nonnegative entries carry no non-primitive content.
inline NonPrimitive decode_nonprimitive(Int c) {
  if (c >= 0) return {};
  Int m = neg(c);
  return NonPrimitive{m % 2, m / 2};
}

/// Path components of a puncture region S_i (1 <= i <= n-1).
struct PunctureRegion {
  Int above = 0;
  Int below = 0;
  Int loops = 0;
  LoopSide side = LoopSide::None;

  /// Signed loop count: b_i.
  Int signed_loops() const { return side == LoopSide::Left ? -loops : loops; }

  friend bool operator==(const PunctureRegion&, const PunctureRegion&) = default;
};

/// Path components of S'_1, the region holding the first crosscap.
struct FirstCrosscapRegion {
  Int above = 0;           // A'
  Int below = 0;           // B'
  Int straight_core = 0;   // psi
  Int noncore_loops = 0;   // lambda_1
  Int core_loops = 0;      // lambda_{c1}
  LoopSide side = LoopSide::None;

  Int loops() const { return noncore_loops + core_loops; }
  Int signed_loops() const { return side == LoopSide::Left ? -loops() : loops(); }
  /// lambda_1^+: non-core loops that open to the left arc beta_n.
  Int right_noncore_loops() const { return side == LoopSide::Right ? noncore_loops : 0; }

  friend bool operator==(const FirstCrosscapRegion&, const FirstCrosscapRegion&) = default;
};

/// S'_2 only has loops opening towards beta_{n+1}.
struct SecondCrosscapRegion {
  Int noncore_loops = 0;  // lambda_2
  Int core_loops = 0;     // lambda_{c2}

  friend bool operator==(const SecondCrosscapRegion&, const SecondCrosscapRegion&) = default;
};

struct ComponentProfile {
  int n = 2;
  Int s0_loops = 0;
  std::vector<PunctureRegion> regions;  // regions[i-1] is S_i
  FirstCrosscapRegion cap1;
  SecondCrosscapRegion cap2;
  std::array<NonPrimitive, 2> nonprimitive{};

  const PunctureRegion& region(int i) const { return regions.at(static_cast<std::size_t>(i - 1)); }

  /// b_i recovered from the loop counts, 1 <= i <= n.
  Int b(int i) const { return i == n ? cap1.signed_loops() : region(i).signed_loops(); }

  friend bool operator==(const ComponentProfile&, const ComponentProfile&) = default;
};

/// psi = max(c1^+ - |b_n|, 0)
inline Int straight_core_count(Int c1, Int b_n) { return std::max<Int>(sub(pos(c1), abs_checked(b_n)), 0); }

/// Selects how A' and B' are derived from t. AsPrinted keeps the uncorrected
/// expressions (without the halving) and exists only so tests can show that
/// the halved form is the one consistent with worked examples.
enum class CrosscapCountForm { Corrected, AsPrinted };

struct AboveBelow {
  Int above = 0;
  Int below = 0;
};

/// A' and B' from t, psi and the two arcs bounding S'_1.
///
/// Endpoint counting on beta_n and beta_{n+1} gives
/// A' + B' = max(beta_n, beta_{n+1}) - psi - 2|b_n|, and A' - B' = t.
inline AboveBelow first_crosscap_above_below(Int t, Int psi, Int beta_n, Int beta_np1,
                                             CrosscapCountForm form = CrosscapCountForm::Corrected) {
  Int b_n = sub(beta_n, beta_np1);
  if (!is_even(b_n)) throw CurveError(ErrorKind::ParityViolation, "beta_n - beta_{n+1} is odd");
  b_n /= 2;
  Int total = sub(sub(std::max(beta_n, beta_np1), psi), twice(abs_checked(b_n)));
  Int up = add(t, total);
  Int down = sub(total, t);
  if (form == CrosscapCountForm::AsPrinted) return {up, down};
  if (!is_even(up))
    throw CurveError(ErrorKind::ParityViolation, "t and psi have different parity; A' would not be an integer");
  return {up / 2, down / 2};
}

/// b_i = (beta_i - beta_{i+1}) / 2 for 1 <= i <= n.
inline std::vector<Int> half_differences(const TriangleCoordinates& tri) {
  check_dimensions(tri);
  std::vector<Int> b(static_cast<std::size_t>(tri.n));
  for (int i = 1; i <= tri.n; ++i) {
    Int d = sub(tri.beta_at(i), tri.beta_at(i + 1));
    if (!is_even(d))
      throw CurveError(ErrorKind::ParityViolation, "beta_" + std::to_string(i) + " - beta_" + std::to_string(i + 1) + " is odd");
    b[static_cast<std::size_t>(i - 1)] = d / 2;
  }
  return b;
}

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw CurveError(ErrorKind::InconsistentTriangle, what);
}

inline LoopSide side_of(Int b) { return b > 0 ? LoopSide::Right : (b < 0 ? LoopSide::Left : LoopSide::None); }

}  // namespace detail

/// Counts every species of path component in every region.
///
/// Throws ParityViolation or InconsistentTriangle when the counts cannot come
/// from a multicurve in minimal position.
inline ComponentProfile profile(const TriangleCoordinates& tri,
                                CrosscapCountForm form = CrosscapCountForm::Corrected) {
  using detail::require;
  check_dimensions(tri);
  const int n = tri.n;
  for (Int x : tri.alpha) require(x >= 0, "negative alpha entry");
  for (Int x : tri.beta) require(x >= 0, "negative beta entry");
  require(tri.gamma >= 0, "negative gamma");
  for (int i = 1; i <= n + 1; ++i)
    if (!is_even(tri.beta_at(i))) throw CurveError(ErrorKind::ParityViolation, "beta_" + std::to_string(i) + " is odd");
  if (!is_even(tri.gamma)) throw CurveError(ErrorKind::ParityViolation, "gamma is odd");

  const std::vector<Int> b = half_differences(tri);
  ComponentProfile p;
  p.n = n;
  p.s0_loops = tri.beta_at(1) / 2;

  p.regions.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    Int up = tri.alpha_at(2 * i - 1);
    Int down = tri.alpha_at(2 * i);
    if (!is_even(sub(up, down)))
      throw CurveError(ErrorKind::ParityViolation, "alpha_" + std::to_string(2 * i - 1) + " and alpha_" +
                                                       std::to_string(2 * i) + " differ in parity");
    Int bi = b[static_cast<std::size_t>(i - 1)];
    Int loops = abs_checked(bi);
    PunctureRegion& r = p.regions[static_cast<std::size_t>(i - 1)];
    r.above = sub(up, loops);
    r.below = sub(down, loops);
    r.loops = loops;
    r.side = detail::side_of(bi);
    require(r.above >= 0 && r.below >= 0, "negative above/below count in S_" + std::to_string(i));
    require(add(add(r.above, r.below), twice(pos(bi))) == tri.beta_at(i),
            "endpoints of S_" + std::to_string(i) + " do not match beta_" + std::to_string(i));
  }

  const Int b_n = b.back();
  const Int c1 = pos(tri.c[0]);
  const Int c2 = pos(tri.c[1]);
  const Int loops_n = abs_checked(b_n);
  const Int psi = straight_core_count(tri.c[0], b_n);
  const Int beta_n = tri.beta_at(n);
  const Int beta_np1 = tri.beta_at(n + 1);
  const Int t = sub(sub(tri.gamma, psi), std::max(beta_n, beta_np1));
  const AboveBelow ab = first_crosscap_above_below(t, psi, beta_n, beta_np1, form);

  p.cap1.above = ab.above;
  p.cap1.below = ab.below;
  p.cap1.straight_core = psi;
  p.cap1.noncore_loops = std::max<Int>(sub(loops_n, c1), 0);
  p.cap1.core_loops = std::min(loops_n, c1);
  p.cap1.side = detail::side_of(b_n);
  require(p.cap1.above >= 0 && p.cap1.below >= 0, "negative above/below count in S'_1");

  p.cap2.core_loops = c2;
  p.cap2.noncore_loops = sub(beta_np1 / 2, c2);
  require(p.cap2.noncore_loops >= 0, "c2 exceeds the loops available in S'_2");

  p.nonprimitive = {decode_nonprimitive(tri.c[0]), decode_nonprimitive(tri.c[1])};
  return p;
}

// ---------------------------------------------------------------------------
// Reconstruction: explicit path components and their gluing along the arcs.
// ---------------------------------------------------------------------------

/// Regions are numbered 0..n+1: 0 is S_0, i is S_i, n is S'_1, n+1 is S'_2.
/// Region r lies between arcs beta_r (left) and beta_{r+1} (right).
inline std::string region_name(int region, int n) {
  if (region == n) return "S'_1";
  if (region == n + 1) return "S'_2";
  return "S_" + std::to_string(region);
}

enum class Species { Above, Below, LeftLoop, RightLoop, LeftCoreLoop, RightCoreLoop, StraightCore };

inline std::string_view to_string(Species s) {
  switch (s) {
    case Species::Above: return "above";
    case Species::Below: return "below";
    case Species::LeftLoop: return "left-loop";
    case Species::RightLoop: return "right-loop";
    case Species::LeftCoreLoop: return "left-core-loop";
    case Species::RightCoreLoop: return "right-core-loop";
    case Species::StraightCore: return "straight-core";
  }
  return "?";
}

/// True for pieces that pass through a crosscap.
inline bool passes_crosscap(Species s) {
  return s == Species::LeftCoreLoop || s == Species::RightCoreLoop || s == Species::StraightCore;
}

inline bool is_loop(Species s) { return s != Species::Above && s != Species::Below && s != Species::StraightCore; }

/// Slot on an arc, counted from the top (boundary side) down, 0-based.
struct Endpoint {
  int arc = 1;
  Int slot = 0;

  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/// One path component. Crossing species go from `first` on the left arc to
/// `second` on the right arc; loops have both ends on one arc with `first`
/// the upper slot.
struct PathComponent {
  Species species = Species::Above;
  Endpoint first;
  Endpoint second;

  friend bool operator==(const PathComponent&, const PathComponent&) = default;
};

struct RegionComponents {
  int region = 0;
  std::vector<PathComponent> pieces;
};

/// For one slot of an arc, the piece reaching it from the left region and the
/// one reaching it from the right region.
struct SlotGlue {
  std::size_t from_left = 0;
  std::size_t from_right = 0;
};

struct GluingDescription {
  int n = 2;
  std::vector<RegionComponents> regions;     // n+2 regions
  std::vector<std::vector<SlotGlue>> arcs;   // arcs[j-1] for beta_j
  std::array<NonPrimitive, 2> nonprimitive{};

  Int strands(int arc) const { return static_cast<Int>(arcs.at(static_cast<std::size_t>(arc - 1)).size()); }
  const RegionComponents& region(int r) const { return regions.at(static_cast<std::size_t>(r)); }
};

namespace detail {

class RegionBuilder {
 public:
  RegionBuilder(int region, int left_arc, int right_arc) : left_(left_arc), right_(right_arc) { out_.region = region; }

  void crossing(Species s, Int left_slot, Int right_slot) {
    out_.pieces.push_back({s, {left_, left_slot}, {right_, right_slot}});
  }
  void loop(Species s, int arc, Int upper, Int lower) { out_.pieces.push_back({s, {arc, upper}, {arc, lower}}); }

  // Nested non-core loops filling [start, start + 2*count) on `arc`.
  void nested(Species s, int arc, Int start, Int count) {
    Int last = start + 2 * count - 1;
    for (Int k = 0; k < count; ++k) loop(s, arc, start + k, last - k);
  }

  RegionComponents take() { return std::move(out_); }

 private:
  int left_;
  int right_;
  RegionComponents out_;
};

inline RegionComponents layout_s0(const ComponentProfile& p) {
  RegionBuilder rb(0, 0, 1);
  rb.nested(Species::LeftLoop, 1, 0, p.s0_loops);
  return rb.take();
}

inline RegionComponents layout_puncture(const ComponentProfile& p, int i) {
  const PunctureRegion& r = p.region(i);
  RegionBuilder rb(i, i, i + 1);
  for (Int s = 0; s < r.above; ++s) rb.crossing(Species::Above, s, s);
  Int shift_left = 0;
  Int shift_right = 0;
  if (r.side == LoopSide::Right) {
    rb.nested(Species::RightLoop, i, r.above, r.loops);
    shift_left = 2 * r.loops;
  } else if (r.side == LoopSide::Left) {
    rb.nested(Species::LeftLoop, i + 1, r.above, r.loops);
    shift_right = 2 * r.loops;
  }
  for (Int s = 0; s < r.below; ++s) rb.crossing(Species::Below, r.above + shift_left + s, r.above + shift_right + s);
  return rb.take();
}

// Loops on one side of S'_1: non-core loops nest outermost, then a block in
// which each core loop joins slot s to slot s + core + psi, with the straight
// cores filling the middle of that block. Passing through the crosscap reverses
// the order of the straight cores.
inline RegionComponents layout_first_crosscap(const ComponentProfile& p) {
  const int n = p.n;
  const FirstCrosscapRegion& r = p.cap1;
  RegionBuilder rb(n, n, n + 1);
  for (Int s = 0; s < r.above; ++s) rb.crossing(Species::Above, s, s);

  const bool right = r.side == LoopSide::Right;
  const int loop_arc = right ? n : n + 1;
  const Species noncore = right ? Species::RightLoop : Species::LeftLoop;
  const Species core = right ? Species::RightCoreLoop : Species::LeftCoreLoop;
  const Int block = r.straight_core + 2 * r.loops();

  Int start = r.above;
  for (Int k = 0; k < r.noncore_loops; ++k) rb.loop(noncore, loop_arc, start + k, start + block - 1 - k);
  const Int inner = start + r.noncore_loops;
  for (Int k = 0; k < r.core_loops; ++k) rb.loop(core, loop_arc, inner + k, inner + k + r.core_loops + r.straight_core);
  for (Int j = 0; j < r.straight_core; ++j) {
    Int on_loop_side = inner + r.core_loops + j;
    Int on_other_side = r.above + r.straight_core - 1 - j;
    if (right)
      rb.crossing(Species::StraightCore, on_loop_side, on_other_side);
    else
      rb.crossing(Species::StraightCore, on_other_side, on_loop_side);
  }
  const Int below_left = r.above + (right ? block : r.straight_core);
  const Int below_right = r.above + (right ? r.straight_core : block);
  for (Int s = 0; s < r.below; ++s) rb.crossing(Species::Below, below_left + s, below_right + s);
  return rb.take();
}

// S'_2: non-core loops outermost, core loops join slot s to s + core_loops.
inline RegionComponents layout_second_crosscap(const ComponentProfile& p) {
  const int n = p.n;
  RegionBuilder rb(n + 1, n + 1, 0);
  const Int total = 2 * (p.cap2.noncore_loops + p.cap2.core_loops);
  for (Int k = 0; k < p.cap2.noncore_loops; ++k) rb.loop(Species::RightLoop, n + 1, k, total - 1 - k);
  const Int inner = p.cap2.noncore_loops;
  for (Int k = 0; k < p.cap2.core_loops; ++k)
    rb.loop(Species::RightCoreLoop, n + 1, inner + k, inner + k + p.cap2.core_loops);
  return rb.take();
}

constexpr std::size_t kUnglued = std::numeric_limits<std::size_t>::max();

}  // namespace detail

/// Glues the path components of every region into one description. Each arc
/// slot is matched to exactly one piece on each side; the matching is the
/// unique crossing-free one.
inline GluingDescription reconstruct(const ComponentProfile& p) {
  const int n = p.n;
  if (n < 2 || p.regions.size() != static_cast<std::size_t>(n - 1))
    throw CurveError(ErrorKind::DimensionMismatch, "profile does not match n");
  GluingDescription g;
  g.n = n;
  g.nonprimitive = p.nonprimitive;
  g.regions.push_back(detail::layout_s0(p));
  for (int i = 1; i <= n - 1; ++i) g.regions.push_back(detail::layout_puncture(p, i));
  g.regions.push_back(detail::layout_first_crosscap(p));
  g.regions.push_back(detail::layout_second_crosscap(p));

  // Count endpoints per arc and side: side 0 = reached from the left region.
  std::vector<std::array<Int, 2>> counts(static_cast<std::size_t>(n + 1), {0, 0});
  for (const auto& rc : g.regions) {
    for (const auto& piece : rc.pieces) {
      for (const Endpoint& e : {piece.first, piece.second}) {
        int side = e.arc == rc.region ? 1 : 0;
        ++counts[static_cast<std::size_t>(e.arc - 1)][static_cast<std::size_t>(side)];
      }
    }
  }
  for (int j = 1; j <= n + 1; ++j) {
    const auto& c = counts[static_cast<std::size_t>(j - 1)];
    if (c[0] != c[1])
      throw CurveError(ErrorKind::EndpointMismatch, "beta_" + std::to_string(j) + " has " + std::to_string(c[0]) +
                                                        " endpoints from the left but " + std::to_string(c[1]) +
                                                        " from the right");
    g.arcs.emplace_back(static_cast<std::size_t>(c[0]), SlotGlue{detail::kUnglued, detail::kUnglued});
  }
  for (const auto& rc : g.regions) {
    for (std::size_t idx = 0; idx < rc.pieces.size(); ++idx) {
      const auto& piece = rc.pieces[idx];
      for (const Endpoint& e : {piece.first, piece.second}) {
        auto& slots = g.arcs[static_cast<std::size_t>(e.arc - 1)];
        if (e.slot < 0 || e.slot >= static_cast<Int>(slots.size()))
          throw CurveError(ErrorKind::EndpointMismatch, "slot outside beta_" + std::to_string(e.arc));
        SlotGlue& glue = slots[static_cast<std::size_t>(e.slot)];
        std::size_t& target = e.arc == rc.region ? glue.from_right : glue.from_left;
        if (target != detail::kUnglued)
          throw CurveError(ErrorKind::EndpointMismatch,
                           "slot " + std::to_string(e.slot) + " of beta_" + std::to_string(e.arc) + " used twice");
        target = idx;
      }
    }
  }
  return g;
}

}  // namespace dyncurve
