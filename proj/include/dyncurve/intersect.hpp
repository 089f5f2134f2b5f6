#pragma once

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "checked.hpp"
#include "components.hpp"
#include "coords.hpp"
#include "error.hpp"
#include "inversion.hpp"
#include "large.hpp"

namespace dyncurve {

/// Curves with known coordinates:
///   Cij(i,j)    bounds a disk holding punctures i..j
///   Cprime1(i)  punctures i..n and the first crosscap
///   Cprime2(i)  punctures i..n and both crosscaps
///   C           both crosscaps
///   D           runs through both crosscaps
///   Core(k)     core curve of crosscap k
///   Bounding(k) boundary of a disk around crosscap k
struct ElementaryCurve {
  enum class Kind { Cij, Cprime1, Cprime2, C, D, Core, Bounding };
  Kind kind = Kind::C;
  int i = 0;
  int j = 0;

  static ElementaryCurve cij(int i, int j) { return {Kind::Cij, i, j}; }
  static ElementaryCurve cprime1(int i) { return {Kind::Cprime1, i, 0}; }
  static ElementaryCurve cprime2(int i) { return {Kind::Cprime2, i, 0}; }
  static ElementaryCurve c() { return {Kind::C, 0, 0}; }
  static ElementaryCurve d() { return {Kind::D, 0, 0}; }
  static ElementaryCurve core(int k) { return {Kind::Core, k, 0}; }
  static ElementaryCurve bounding(int k) { return {Kind::Bounding, k, 0}; }

  bool nonprimitive() const { return kind == Kind::Core || kind == Kind::Bounding; }

  friend bool operator==(const ElementaryCurve&, const ElementaryCurve&) = default;
};

inline bool is_valid(const ElementaryCurve& e, int n) {
  using K = ElementaryCurve::Kind;
  switch (e.kind) {
    case K::Cij: return 1 <= e.i && e.i < e.j && e.j <= n;
    case K::Cprime1: return 1 <= e.i && e.i <= n;
    case K::Cprime2: return 1 < e.i && e.i <= n;
    case K::C:
    case K::D: return true;
    case K::Core:
    case K::Bounding: return e.i == 1 || e.i == 2;
  }
  return false;
}

/// Text form used on the command line: "Cij:2,3", "Cprime1:1", "Cprime2:2",
/// "C", "D", "Core:1", "Bounding:2".
inline std::string format_curve(const ElementaryCurve& e) {
  using K = ElementaryCurve::Kind;
  switch (e.kind) {
    case K::Cij: return "Cij:" + std::to_string(e.i) + "," + std::to_string(e.j);
    case K::Cprime1: return "Cprime1:" + std::to_string(e.i);
    case K::Cprime2: return "Cprime2:" + std::to_string(e.i);
    case K::C: return "C";
    case K::D: return "D";
    case K::Core: return "Core:" + std::to_string(e.i);
    case K::Bounding: return "Bounding:" + std::to_string(e.i);
  }
  return "?";
}

namespace detail {

inline int parse_index(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw CurveError(ErrorKind::ParameterError, "bad index in curve spec '" + std::string(whole) + "'");
  return v;
}

}  // namespace detail

inline ElementaryCurve parse_curve(std::string_view text) {
  using K = ElementaryCurve::Kind;
  auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto bad = [&] { return CurveError(ErrorKind::ParameterError, "unknown curve spec '" + std::string(text) + "'"); };

  if (name == "C" || name == "D") {
    if (colon != std::string_view::npos) throw bad();
    return name == "C" ? ElementaryCurve::c() : ElementaryCurve::d();
  }
  if (colon == std::string_view::npos) throw bad();
  if (name == "Cij") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) throw bad();
    return {K::Cij, detail::parse_index(args.substr(0, comma), text), detail::parse_index(args.substr(comma + 1), text)};
  }
  int i = detail::parse_index(args, text);
  if (name == "Cprime1") return ElementaryCurve::cprime1(i);
  if (name == "Cprime2") return ElementaryCurve::cprime2(i);
  if (name == "Core") return ElementaryCurve::core(i);
  if (name == "Bounding") return ElementaryCurve::bounding(i);
  throw bad();
}

/// Every elementary curve for n punctures, non-primitive ones last.
inline std::vector<ElementaryCurve> catalog(int n, bool with_nonprimitive = true) {
  std::vector<ElementaryCurve> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back(ElementaryCurve::cij(i, j));
  for (int i = 1; i <= n; ++i) out.push_back(ElementaryCurve::cprime1(i));
  for (int i = 2; i <= n; ++i) out.push_back(ElementaryCurve::cprime2(i));
  out.push_back(ElementaryCurve::c());
  out.push_back(ElementaryCurve::d());
  if (with_nonprimitive)
    for (int k = 1; k <= 2; ++k) {
      out.push_back(ElementaryCurve::core(k));
      out.push_back(ElementaryCurve::bounding(k));
    }
  return out;
}

inline DynnikovCoordinates elementary_coords(const ElementaryCurve& e, int n) {
  using K = ElementaryCurve::Kind;
  if (n < 2) throw CurveError(ErrorKind::ParameterError, "puncture count must be at least 2");
  if (!is_valid(e, n)) throw CurveError(ErrorKind::ParameterError, format_curve(e) + " is not defined for n=" + std::to_string(n));
  DynnikovCoordinates v;
  v.n = n;
  v.a.assign(static_cast<std::size_t>(n - 1), 0);
  v.b.assign(static_cast<std::size_t>(n), 0);
  auto set_b = [&](int idx, Int value) { v.b[static_cast<std::size_t>(idx - 1)] = value; };
  switch (e.kind) {
    case K::Cij:
      if (e.i > 1) set_b(e.i - 1, -1);
      set_b(e.j - 1, 1);
      break;
    case K::Cprime1:
      if (e.i > 1) set_b(e.i - 1, -1);
      set_b(n, 1);
      break;
    case K::Cprime2: set_b(e.i - 1, -1); break;
    case K::C: set_b(n, -1); break;
    case K::D:
      set_b(n, -1);
      v.c = {1, 1};
      break;
    case K::Core: v.c[static_cast<std::size_t>(e.i - 1)] = -1; break;
    case K::Bounding: v.c[static_cast<std::size_t>(e.i - 1)] = -2; break;
  }
  return v;
}

/// How the D count is obtained from i(L, C), c1 and c2. AsPrinted is the bare
/// i(L, C) - c1 - c2 branch, which goes negative once i(L, C) < c1 + c2 and is
/// too small whenever i(L, C) - c1 - c2 < |c1 - c2|; it is kept for tests.
enum class DFormula { Corrected, AsPrinted };

namespace detail {

inline Int beta_or_zero(const TriangleCoordinates& tri, int i) { return i == 0 ? 0 : tri.beta_at(i); }

inline Int intersect_c(const TriangleCoordinates& tri, const ComponentProfile& p) {
  return sub(tri.beta_at(p.n), twice(large_right(p, RegionRange::crosscap2(p.n))));
}

}  // namespace detail

/// Geometric intersection number of a multicurve, given by its triangle
/// coordinates and component profile, with an elementary curve.
inline Int intersect_elementary(const TriangleCoordinates& tri, const ComponentProfile& p, const ElementaryCurve& e,
                                DFormula d_form = DFormula::Corrected) {
  using K = ElementaryCurve::Kind;
  const int n = p.n;
  if (e.nonprimitive())
    throw CurveError(ErrorKind::UnsupportedCurve, "no intersection formula for " + format_curve(e));
  if (!is_valid(e, n)) throw CurveError(ErrorKind::ParameterError, format_curve(e) + " is not defined for n=" + std::to_string(n));
  if (tri.c[0] < 0 || tri.c[1] < 0)
    throw CurveError(ErrorKind::NonprimitiveContent, "intersection formulas need c1, c2 >= 0");

  switch (e.kind) {
    case K::Cij: {
      const int l = e.i - 1;
      const int m = e.j - 1;
      auto [above, below] = large_over_under(p, l, m);
      Int large = add(add(large_right(p, RegionRange::plain(l, m)), large_left(p, RegionRange::plain(l, m))),
                      add(above, below));
      return sub(add(detail::beta_or_zero(tri, l), tri.beta_at(m + 1)), twice(large));
    }
    case K::Cprime1: {
      const int l = e.i - 1;
      auto [above, below] = large_over_under_crosscap(p, l);
      Int large = add(add(large_right(p, RegionRange::crosscap1(l)), large_left(p, RegionRange::crosscap1(l))),
                      add(above, below));
      return sub(add(detail::beta_or_zero(tri, l), tri.beta_at(n + 1)), twice(large));
    }
    case K::Cprime2: {
      const int l = e.i - 1;
      return sub(tri.beta_at(l), twice(large_right(p, RegionRange::crosscap2(l))));
    }
    case K::C: return detail::intersect_c(tri, p);
    case K::D: {
      const Int with_c = detail::intersect_c(tri, p);
      const Int spread = std::abs(sub(tri.c[0], tri.c[1]));
      if (with_c == 0) return spread;
      const Int rest = sub(sub(with_c, tri.c[0]), tri.c[1]);
      return d_form == DFormula::AsPrinted ? rest : std::max(spread, rest);
    }
    default: break;
  }
  throw CurveError(ErrorKind::UnsupportedCurve, "no intersection formula for " + format_curve(e));
}

inline Int intersect_elementary(const DynnikovCoordinates& coords, const ElementaryCurve& e,
                                DFormula d_form = DFormula::Corrected) {
  if (e.nonprimitive())
    throw CurveError(ErrorKind::UnsupportedCurve, "no intersection formula for " + format_curve(e));
  if (coords.c[0] < 0 || coords.c[1] < 0)
    throw CurveError(ErrorKind::NonprimitiveContent, "intersection formulas need c1, c2 >= 0");
  const TriangleCoordinates tri = invert(coords);
  return intersect_elementary(tri, profile(tri), e, d_form);
}

}  // namespace dyncurve
