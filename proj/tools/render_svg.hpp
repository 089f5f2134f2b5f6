#pragma once

#include <cstdio>
#include <map>
#include <sstream>
#include <string>

#include <dyncurve/components.hpp>
#include <dyncurve/error.hpp>

namespace dyncurve::tools {

struct StrokeStyle {
  std::string color;
  double width = 1.5;
  bool dashed = false;
};

struct RenderSpec {
  int width = 720;
  int height = 360;
  int spacing = 0;  // distance between neighbouring features; 0 spreads them over the width
  std::map<Species, StrokeStyle> styles{
      {Species::Above, {"#1f77b4", 1.5, false}},       {Species::Below, {"#1f77b4", 1.5, false}},
      {Species::LeftLoop, {"#2ca02c", 1.5, false}},    {Species::RightLoop, {"#2ca02c", 1.5, false}},
      {Species::LeftCoreLoop, {"#d62728", 1.5, true}}, {Species::RightCoreLoop, {"#d62728", 1.5, true}},
      {Species::StraightCore, {"#9467bd", 1.5, true}},
  };

  void check() const {
    if (width <= 0 || height <= 0 || spacing < 0)
      throw CurveError(ErrorKind::ParameterError, "render dimensions must be positive");
  }
};

namespace detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  return buf;
}

}  // namespace detail

/// Draws the glued path components: punctures as dots, crosscaps as crossed
/// circles on the horizontal diameter, reference arcs beta_j as thin vertical
/// lines and every piece as a curve between its slots.
inline std::string render_svg(const GluingDescription& g, const RenderSpec& spec = {}) {
  using detail::num;
  spec.check();
  const int n = g.n;
  const int features = n + 2;  // punctures 1..n, then the two crosscaps
  const double margin = 30;
  const double spacing =
      spec.spacing > 0 ? spec.spacing : (spec.width - 2 * margin) / static_cast<double>(features);
  const double cy = spec.height / 2.0;
  const double usable = spec.height - 2 * margin;

  // Feature k (0-based) centre and arc j position between features j-1 and j.
  auto feature_x = [&](int k) { return margin + spacing * (k + 0.5); };
  auto arc_x = [&](int j) { return margin + spacing * j; };
  auto slot_y = [&](int arc, Int slot) {
    const Int m = g.strands(arc);
    return cy - usable / 2 + usable * static_cast<double>(slot + 1) / static_cast<double>(m + 1);
  };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width << "\" height=\""
      << spec.height << "\" viewBox=\"0 0 " << spec.width << ' ' << spec.height << "\">\n";
  out << "<rect x=\"" << num(margin / 2) << "\" y=\"" << num(margin / 2) << "\" width=\"" << num(spec.width - margin)
      << "\" height=\"" << num(spec.height - margin) << "\" rx=\"" << num(margin) << "\" fill=\"none\" stroke=\"#000\"/>\n";
  out << "<line x1=\"" << num(margin / 2) << "\" y1=\"" << num(cy) << "\" x2=\"" << num(spec.width - margin / 2)
      << "\" y2=\"" << num(cy) << "\" stroke=\"#bbb\" stroke-dasharray=\"4 4\"/>\n";
  for (int j = 1; j <= n + 1; ++j)
    out << "<line x1=\"" << num(arc_x(j)) << "\" y1=\"" << num(margin / 2) << "\" x2=\"" << num(arc_x(j))
        << "\" y2=\"" << num(spec.height - margin / 2) << "\" stroke=\"#ddd\"/>\n";

  for (const auto& rc : g.regions) {
    const double fx = feature_x(rc.region);
    for (const auto& p : rc.pieces) {
      const StrokeStyle& st = spec.styles.at(p.species);
      const double x1 = arc_x(p.first.arc);
      const double y1 = slot_y(p.first.arc, p.first.slot);
      const double x2 = arc_x(p.second.arc);
      const double y2 = slot_y(p.second.arc, p.second.slot);
      std::string d;
      if (p.first.arc != p.second.arc) {
        const double mid = (x1 + x2) / 2;
        if (passes_crosscap(p.species))
          d = "M" + num(x1) + " " + num(y1) + " Q" + num(mid) + " " + num(y1) + " " + num(fx) + " " + num(cy) + " Q" +
              num(mid) + " " + num(y2) + " " + num(x2) + " " + num(y2);
        else
          d = "M" + num(x1) + " " + num(y1) + " C" + num(mid) + " " + num(y1) + " " + num(mid) + " " + num(y2) + " " +
              num(x2) + " " + num(y2);
      } else {
        // Loops bulge past the feature of their region.
        const double reach = fx + (fx - x1) * 0.8;
        if (passes_crosscap(p.species))
          d = "M" + num(x1) + " " + num(y1) + " Q" + num(fx) + " " + num(y1) + " " + num(fx) + " " + num(cy) + " Q" +
              num(fx) + " " + num(y2) + " " + num(x1) + " " + num(y2);
        else
          d = "M" + num(x1) + " " + num(y1) + " C" + num(reach) + " " + num(y1) + " " + num(reach) + " " + num(y2) +
              " " + num(x1) + " " + num(y2);
      }
      out << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << st.color << "\" stroke-width=\"" << num(st.width)
          << "\"" << (st.dashed ? " stroke-dasharray=\"5 3\"" : "") << " data-species=\"" << to_string(p.species)
          << "\"/>\n";
    }
  }

  for (int k = 0; k < features; ++k) {
    const double x = feature_x(k);
    if (k < n) {
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(cy) << "\" r=\"4\" fill=\"#000\"/>\n";
    } else {
      const double r = 9;
      out << "<circle cx=\"" << num(x) << "\" cy=\"" << num(cy) << "\" r=\"" << num(r)
          << "\" fill=\"#fff\" stroke=\"#000\"/>\n";
      out << "<path d=\"M" << num(x - r * 0.7) << " " << num(cy - r * 0.7) << " L" << num(x + r * 0.7) << " "
          << num(cy + r * 0.7) << " M" << num(x - r * 0.7) << " " << num(cy + r * 0.7) << " L" << num(x + r * 0.7)
          << " " << num(cy - r * 0.7) << "\" stroke=\"#000\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace dyncurve::tools
