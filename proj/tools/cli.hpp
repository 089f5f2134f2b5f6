#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <dyncurve/dyncurve.hpp>
#include <dyncurve/json.hpp>

#include "render_svg.hpp"

namespace dyncurve::tools {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CurveError(ErrorKind::ParameterError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '{';
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw CurveError(ErrorKind::SyntaxError, std::string("bad JSON: ") + e.what());
  }
}

// Input given as a positional argument or through --file, in either the
// "(...; ...)" notation or JSON.
inline std::string input_text(const std::string& positional, const std::string& file) {
  if (!file.empty()) return read_file(file);
  if (positional.empty()) throw CurveError(ErrorKind::ParameterError, "no input: pass coordinates or --file");
  return positional;
}

inline DynnikovCoordinates read_coords(const std::string& text, int n) {
  if (looks_like_json(text)) return parse_json(text).get<DynnikovCoordinates>();
  return parse_coords(text, n);
}

inline TriangleCoordinates read_triangle(const std::string& text, int n) {
  if (looks_like_json(text)) return parse_json(text).get<TriangleCoordinates>();
  return parse_triangle(text, n);
}

inline void print_rows(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& r : rows) out << std::left << std::setw(static_cast<int>(w)) << r.first << "  " << r.second << '\n';
}

inline std::string list(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

inline void print_profile(std::ostream& out, const ComponentProfile& p) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.push_back({"S_0", "loops " + std::to_string(p.s0_loops)});
  for (int i = 1; i <= p.n - 1; ++i) {
    const auto& r = p.region(i);
    rows.push_back({"S_" + std::to_string(i), "above " + std::to_string(r.above) + "  below " + std::to_string(r.below) +
                                                  "  loops " + std::to_string(r.loops) + " " + to_string(r.side)});
  }
  const auto& c = p.cap1;
  rows.push_back({"S'_1", "above " + std::to_string(c.above) + "  below " + std::to_string(c.below) + "  straight " +
                              std::to_string(c.straight_core) + "  loops " + std::to_string(c.noncore_loops) +
                              "  core loops " + std::to_string(c.core_loops) + " " + to_string(c.side)});
  rows.push_back({"S'_2", "loops " + std::to_string(p.cap2.noncore_loops) + "  core loops " +
                              std::to_string(p.cap2.core_loops)});
  for (int k = 0; k < 2; ++k) {
    const auto& np = p.nonprimitive[static_cast<std::size_t>(k)];
    if (np.cores || np.bounding)
      rows.push_back({"crosscap " + std::to_string(k + 1), "cores " + std::to_string(np.cores) + "  bounding " +
                                                               std::to_string(np.bounding)});
  }
  print_rows(out, rows);
}

}  // namespace detail

/// Runs the command line. Returns 0 on success, 1 on bad input and 2 when the
/// self-test finds a disagreement.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Dynnikov coordinates on K_n"};
  app.require_subcommand(1);

  int n = 2;
  bool as_json = false;
  std::string input;
  std::string file;
  auto common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--n", n, "number of punctures")->check(CLI::Range(2, 1000));
    sub->add_flag("--json", as_json, "machine-readable output");
    if (with_input) {
      sub->add_option("coords", input, "coordinates, e.g. \"(2; 1,0; -2; 2,0)\", or a JSON object");
      sub->add_option("--file", file, "read the input from a file");
    }
  };

  auto* invert_cmd = app.add_subcommand("invert", "Dynnikov coordinates to intersection counts");
  common(invert_cmd, true);

  auto* coordinatize_cmd = app.add_subcommand("coordinatize", "intersection counts to Dynnikov coordinates");
  common(coordinatize_cmd, true);

  auto* profile_cmd = app.add_subcommand("profile", "path components in every region");
  common(profile_cmd, true);
  std::vector<int> large;
  profile_cmd->add_option("--large", large, "also report large components for S_{l,m}")->expected(2);

  auto* intersect_cmd = app.add_subcommand("intersect", "intersection with an elementary curve");
  common(intersect_cmd, true);
  std::string curve_spec;
  bool all_curves = false;
  auto* curve_opt = intersect_cmd->add_option("--curve", curve_spec, "Cij:i,j | Cprime1:i | Cprime2:i | C | D");
  auto* all_opt = intersect_cmd->add_flag("--all", all_curves, "every elementary curve");
  curve_opt->excludes(all_opt);

  auto* render_cmd = app.add_subcommand("render", "SVG picture of the multicurve");
  common(render_cmd, true);
  RenderSpec spec;
  std::string output;
  render_cmd->add_option("--width", spec.width, "pixels");
  render_cmd->add_option("--height", spec.height, "pixels");
  render_cmd->add_option("--spacing", spec.spacing, "pixels between features (0 = fit width)");
  render_cmd->add_option("-o,--output", output, "write the SVG to a file instead of stdout");

  auto* selftest_cmd = app.add_subcommand("selftest", "compare formulas with strand tracing on a grid");
  common(selftest_cmd, false);
  Int bound = 2;
  selftest_cmd->add_option("--bound", bound, "entries range over [-bound, bound], c over [0, bound]")
      ->check(CLI::Range(0, 10));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 1;
  }

  try {
    if (invert_cmd->parsed()) {
      const TriangleCoordinates tri = invert(detail::read_coords(detail::input_text(input, file), n));
      if (as_json)
        out << json(tri).dump() << '\n';
      else
        detail::print_rows(out, {{"alpha", detail::list(tri.alpha)},
                                 {"beta", detail::list(tri.beta)},
                                 {"gamma", std::to_string(tri.gamma)},
                                 {"c", std::to_string(tri.c[0]) + " " + std::to_string(tri.c[1])},
                                 {"text", format_triangle(tri)}});
      return 0;
    }
    if (coordinatize_cmd->parsed()) {
      const DynnikovCoordinates v = coordinatize(detail::read_triangle(detail::input_text(input, file), n));
      if (as_json)
        out << json(v).dump() << '\n';
      else
        out << format_coords(v) << '\n';
      return 0;
    }
    if (profile_cmd->parsed()) {
      const ComponentProfile p = profile(detail::read_coords(detail::input_text(input, file), n));
      std::optional<LargeComponentCounts> counts;
      if (!large.empty()) counts = large_counts(p, large[0], large[1]);
      if (as_json) {
        json j = to_json_value(p);
        if (counts) j["large"] = to_json_value(*counts, large[0], large[1]);
        out << j.dump() << '\n';
      } else {
        detail::print_profile(out, p);
        if (counts) {
          const auto& c = *counts;
          out << '\n';
          detail::print_rows(out, {{"A_lm B_lm", std::to_string(c.a_lm) + " " + std::to_string(c.b_lm)},
                                   {"A'_l1 B'_l1", std::to_string(c.ap_l1) + " " + std::to_string(c.bp_l1)},
                                   {"R_lm L_lm", std::to_string(c.r_lm) + " " + std::to_string(c.l_lm)},
                                   {"R'_l1 L'_l1", std::to_string(c.rp_l1) + " " + std::to_string(c.lp_l1)},
                                   {"R'_l2", std::to_string(c.rp_l2)}});
        }
      }
      return 0;
    }
    if (intersect_cmd->parsed()) {
      const DynnikovCoordinates v = detail::read_coords(detail::input_text(input, file), n);
      std::vector<ElementaryCurve> curves;
      if (all_curves)
        curves = catalog(v.n, false);
      else if (!curve_spec.empty())
        curves.push_back(parse_curve(curve_spec));
      else
        throw CurveError(ErrorKind::ParameterError, "pass --curve or --all");
      const TriangleCoordinates tri = invert(v);
      const ComponentProfile p = profile(tri);
      json results = json::array();
      std::vector<std::pair<std::string, std::string>> rows;
      for (const auto& e : curves) {
        const Int value = intersect_elementary(tri, p, e);
        results.push_back(intersection_json(e, value));
        rows.push_back({format_curve(e), std::to_string(value)});
      }
      if (as_json)
        out << (all_curves ? results : results.front()).dump() << '\n';
      else
        detail::print_rows(out, rows);
      return 0;
    }
    if (render_cmd->parsed()) {
      const GluingDescription g = reconstruct(profile(detail::read_coords(detail::input_text(input, file), n)));
      const std::string svg = render_svg(g, spec);
      if (output.empty()) {
        out << svg;
      } else {
        std::ofstream f(output);
        if (!f) throw CurveError(ErrorKind::ParameterError, "cannot write " + output);
        f << svg;
      }
      return 0;
    }
    if (selftest_cmd->parsed()) {
      const GridReport r = compare_on_grid(n, bound);
      if (as_json) {
        json j{{"n", n},
               {"bound", bound},
               {"points", r.points},
               {"unrealizable", r.unrealizable},
               {"comparisons", r.comparisons},
               {"divergences", r.divergences}};
        if (r.first)
          j["first"] = {{"coords", r.first->coords},
                        {"triangle", r.first->triangle},
                        {"profile", to_json_value(r.first->profile)},
                        {"curve", format_curve(r.first->curve)},
                        {"formula", r.first->formula},
                        {"traced", r.first->traced}};
        out << j.dump() << '\n';
      } else {
        detail::print_rows(out, {{"points", std::to_string(r.points)},
                                 {"unrealizable", std::to_string(r.unrealizable)},
                                 {"comparisons", std::to_string(r.comparisons)},
                                 {"divergences", std::to_string(r.divergences)}});
        if (r.first) {
          const Divergence& d = *r.first;
          out << "\nfirst divergence at " << format_coords(d.coords) << "\n  triangle " << format_triangle(d.triangle)
              << "\n  curve " << format_curve(d.curve) << ": formula " << d.formula << ", traced " << d.traced << "\n";
          detail::print_profile(out, d.profile);
        }
      }
      return r.divergences == 0 ? 0 : 2;
    }
  } catch (const CurveError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dyncurve::tools
