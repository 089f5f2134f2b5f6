#pragma once

#include <algorithm>
#include <vector>

#include "checked.hpp"
#include "components.hpp"
#include "coords.hpp"

namespace dyncurve {

/// Intermediate quantities of the inversion: X, Y, beta* and the shift R.
struct InversionIntermediates {
  Int x = 0;
  Int y = 0;
  std::vector<Int> beta_star;  // beta_star[i-1] is beta*_i, 1 <= i <= n+1
  Int r = 0;
};

inline InversionIntermediates inversion_intermediates(const DynnikovCoordinates& v) {
  check_dimensions(v);
  const int n = v.n;
  const auto& a = v.a;
  const auto& b = v.b;
  InversionIntermediates out;

  // X = 2 max_r { |a_r| + b_r^+ + sum_{j<r} b_j }
  Int prefix = 0;
  Int best = 0;
  for (int r = 1; r <= n - 1; ++r) {
    auto ri = static_cast<std::size_t>(r - 1);
    Int term = add(add(abs_checked(a[ri]), pos(b[ri])), prefix);
    best = r == 1 ? term : std::max(best, term);
    prefix = add(prefix, b[ri]);
  }
  out.x = twice(best);

  // prefix now holds sum_{j=1}^{n-1} b_j
  const Int b_n = b.back();
  const Int psi = straight_core_count(v.c[0], b_n);
  out.y = add(add(add(abs_checked(v.t), twice(pos(b_n))), psi), twice(prefix));

  const Int top = std::max(out.x, out.y);
  out.beta_star.resize(static_cast<std::size_t>(n + 1));
  Int running = 0;
  for (int i = 1; i <= n + 1; ++i) {
    out.beta_star[static_cast<std::size_t>(i - 1)] = sub(top, twice(running));
    if (i <= n) running = add(running, b[static_cast<std::size_t>(i - 1)]);
  }
  out.r = std::max<Int>(0, sub(twice(v.c[1]), out.beta_star.back()));
  return out;
}

/// Vectors whose t and psi differ in parity have no minimal representative:
/// every beta arc separates the surface, so each beta_i is even and
/// A' + B' = max(beta_n, beta_{n+1}) - psi - 2|b_n| forces t = A' - B' to share
/// the parity of psi.
inline bool is_realizable(const DynnikovCoordinates& v) {
  check_dimensions(v);
  if (is_zero(v)) return false;
  Int psi = straight_core_count(v.c[0], v.b.back());
  return is_even(sub(v.t, psi));
}

/// Recovers the intersection counts (alpha; beta; gamma; c1, c2).
inline TriangleCoordinates invert(const DynnikovCoordinates& coords) {
  const ValidatedCoordinates valid = validate(coords);
  const DynnikovCoordinates& v = valid.get();
  if (!is_realizable(v))
    throw CurveError(ErrorKind::Unrealizable, format_coords(v) + " has t and psi of different parity");
  const int n = v.n;
  const InversionIntermediates mid = inversion_intermediates(v);

  TriangleCoordinates tri;
  tri.n = n;
  tri.c = v.c;
  tri.beta.resize(static_cast<std::size_t>(n + 1));
  for (std::size_t i = 0; i < tri.beta.size(); ++i) tri.beta[i] = add(mid.beta_star[i], twice(mid.r));

  tri.alpha.resize(static_cast<std::size_t>(2 * n - 2));
  for (int i = 1; i <= 2 * n - 2; ++i) {
    const int k = (i + 1) / 2;  // ceil(i/2)
    const auto ki = static_cast<std::size_t>(k - 1);
    const Int signed_a = (i % 2 == 0) ? v.a[ki] : neg(v.a[ki]);
    const Int half_beta = v.b[ki] >= 0 ? tri.beta[ki] / 2 : tri.beta[ki + 1] / 2;
    tri.alpha[static_cast<std::size_t>(i - 1)] = add(signed_a, half_beta);
  }

  const Int b_n = v.b.back();
  const Int psi = straight_core_count(v.c[0], b_n);
  const AboveBelow ab = first_crosscap_above_below(v.t, psi, tri.beta_at(n), tri.beta_at(n + 1));
  tri.gamma = twice(add(add(ab.above, abs_checked(b_n)), psi));
  return tri;
}

/// Dynnikov coordinates of a triangle-coordinate vector. The input must satisfy
/// the parity and nonnegativity invariants; t is recovered in closed form as
/// gamma - psi - max(beta_n, beta_{n+1}).
inline DynnikovCoordinates coordinatize(const TriangleCoordinates& tri) {
  check_dimensions(tri);
  try {
    (void)profile(tri);
  } catch (const CurveError& e) {
    if (e.kind() == ErrorKind::Overflow) throw;
    throw CurveError(ErrorKind::InconsistentTriangle, e.what());
  }
  const int n = tri.n;
  DynnikovCoordinates v;
  v.n = n;
  v.c = tri.c;
  v.a.resize(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    v.a[static_cast<std::size_t>(i - 1)] = sub(tri.alpha_at(2 * i), tri.alpha_at(2 * i - 1)) / 2;
  v.b = half_differences(tri);
  const Int psi = straight_core_count(tri.c[0], v.b.back());
  v.t = sub(sub(tri.gamma, psi), std::max(tri.beta_at(n), tri.beta_at(n + 1)));
  return v;
}

/// Convenience: profile of the multicurve with the given coordinates.
inline ComponentProfile profile(const DynnikovCoordinates& v) { return profile(invert(v)); }

}  // namespace dyncurve
