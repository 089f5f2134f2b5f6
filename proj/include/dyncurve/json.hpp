#pragma once

#include <json.hpp>

#include "components.hpp"
#include "coords.hpp"
#include "error.hpp"
#include "intersect.hpp"
#include "inversion.hpp"
#include "large.hpp"

namespace dyncurve {

using nlohmann::json;

inline void to_json(json& j, const DynnikovCoordinates& v) {
  j = json{{"n", v.n}, {"a", v.a}, {"b", v.b}, {"t", v.t}, {"c", v.c}};
}

inline void from_json(const json& j, DynnikovCoordinates& v) {
  try {
    j.at("n").get_to(v.n);
    j.at("a").get_to(v.a);
    j.at("b").get_to(v.b);
    j.at("t").get_to(v.t);
    j.at("c").get_to(v.c);
  } catch (const json::exception& e) {
    throw CurveError(ErrorKind::SyntaxError, std::string("bad coordinate JSON: ") + e.what());
  }
  check_dimensions(v);
}

inline void to_json(json& j, const TriangleCoordinates& tri) {
  j = json{{"n", tri.n}, {"alpha", tri.alpha}, {"beta", tri.beta}, {"gamma", tri.gamma}, {"c", tri.c}};
}

inline void from_json(const json& j, TriangleCoordinates& tri) {
  try {
    j.at("n").get_to(tri.n);
    j.at("alpha").get_to(tri.alpha);
    j.at("beta").get_to(tri.beta);
    j.at("gamma").get_to(tri.gamma);
    j.at("c").get_to(tri.c);
  } catch (const json::exception& e) {
    throw CurveError(ErrorKind::SyntaxError, std::string("bad triangle JSON: ") + e.what());
  }
  check_dimensions(tri);
}

inline std::string to_string(LoopSide s) {
  switch (s) {
    case LoopSide::Left: return "left";
    case LoopSide::Right: return "right";
    case LoopSide::None: return "none";
  }
  return "none";
}

inline json to_json_value(const ComponentProfile& p) {
  json regions = json::array();
  for (int i = 1; i <= p.n - 1; ++i) {
    const auto& r = p.region(i);
    regions.push_back({{"region", i}, {"above", r.above}, {"below", r.below}, {"loops", r.loops}, {"side", to_string(r.side)}});
  }
  json nonprimitive = json::array();
  for (const auto& np : p.nonprimitive) nonprimitive.push_back({{"cores", np.cores}, {"bounding", np.bounding}});
  return json{{"n", p.n},
              {"s0_loops", p.s0_loops},
              {"regions", regions},
              {"crosscap1",
               {{"above", p.cap1.above},
                {"below", p.cap1.below},
                {"straight_core", p.cap1.straight_core},
                {"noncore_loops", p.cap1.noncore_loops},
                {"core_loops", p.cap1.core_loops},
                {"side", to_string(p.cap1.side)}}},
              {"crosscap2", {{"noncore_loops", p.cap2.noncore_loops}, {"core_loops", p.cap2.core_loops}}},
              {"nonprimitive", nonprimitive}};
}

inline json to_json_value(const LargeComponentCounts& c, int l, int m) {
  return json{{"l", l},           {"m", m},           {"A_lm", c.a_lm},   {"B_lm", c.b_lm},
              {"Aprime_l1", c.ap_l1}, {"Bprime_l1", c.bp_l1}, {"R_lm", c.r_lm},   {"Rprime_l1", c.rp_l1},
              {"Rprime_l2", c.rp_l2}, {"L_lm", c.l_lm},   {"Lprime_l1", c.lp_l1}};
}

inline json to_json_value(const GluingDescription& g) {
  json regions = json::array();
  for (const auto& rc : g.regions) {
    json pieces = json::array();
    for (const auto& p : rc.pieces)
      pieces.push_back({{"species", std::string(to_string(p.species))},
                        {"first", {p.first.arc, p.first.slot}},
                        {"second", {p.second.arc, p.second.slot}}});
    regions.push_back({{"region", region_name(rc.region, g.n)}, {"pieces", pieces}});
  }
  json arcs = json::array();
  for (int j = 1; j <= g.n + 1; ++j) arcs.push_back({{"arc", j}, {"strands", g.strands(j)}});
  return json{{"n", g.n}, {"regions", regions}, {"arcs", arcs}};
}

inline json intersection_json(const ElementaryCurve& e, Int value) {
  return json{{"curve", format_curve(e)}, {"value", value}};
}

}  // namespace dyncurve
