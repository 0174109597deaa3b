#pragma once

// JSON ingestion and emission for hexagons, surfaces, and reports.
//
// Inputs accept either {"half_long":[...]} or {"alphas":[...],"d":...}; when
// both are present the angle form wins, so emitted shapes (which carry both)
// re-ingest bitwise. All numbers are emitted at 17 significant digits via
// dump_json17.

#include <array>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "hexstretch/deform.hpp"
#include "hexstretch/errors.hpp"
#include "hexstretch/hexagon.hpp"
#include "hexstretch/surface.hpp"

namespace hexstretch {

using Json = nlohmann::ordered_json;

namespace detail {

inline double require_number(const Json& j, const std::string& where) {
  if (!j.is_number()) throw SchemaError(where + " must be a number");
  return j.get<double>();
}

inline std::array<double, 3> require_triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3)
    throw SchemaError(where + " must be an array of three numbers");
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[i] = require_number(j[i], where + "[" + std::to_string(i) + "]");
  return out;
}

inline void append_number17(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
  // Bare integers and specials stay valid JSON tokens.
}

inline void dump17(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump17(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump17(j[i], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      append_number17(out, j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace detail

// Serialize with every floating-point number at 17 significant digits.
inline std::string dump_json17(const Json& j) {
  std::string out;
  detail::dump17(j, out);
  return out;
}

inline Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw SchemaError("input is not valid JSON");
  return j;
}

inline HexagonShape hexagon_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("hexagon must be a JSON object");
  if (j.contains("alphas") && j.contains("d")) {
    return hexagon_from_angles(detail::require_triple(j["alphas"], "alphas"),
                               detail::require_number(j["d"], "d"));
  }
  if (j.contains("half_long"))
    return hexagon_from_half_longs(detail::require_triple(j["half_long"], "half_long"));
  throw SchemaError("hexagon needs either \"half_long\" or \"alphas\" plus \"d\"");
}

inline Json hexagon_to_json(const HexagonShape& h) {
  Json j;
  j["alphas"] = h.alpha;
  j["d"] = h.d;
  j["half_long"] = h.ell;
  j["L"] = h.L;
  j["lambda"] = h.lambda;
  j["h"] = h.h;
  j["type"] = to_string(h.type);
  return j;
}

inline Json hexagon_report_json(const HexagonShape& h) {
  Json j = hexagon_to_json(h);
  double quad_max = 0.0;
  for (int i = 0; i < 3; ++i) {
    const QuadShape q =
        h.alpha[i] == kHalfPi ? quad_degenerate(h.d) : quad_from_alpha_d(h.alpha[i], h.d);
    for (double r : quad_residuals(q)) quad_max = std::max(quad_max, std::abs(r));
  }
  double id_max = 0.0;
  for (double r : hexagon_identity_residuals(h)) id_max = std::max(id_max, std::abs(r));
  j["residuals"] = Json{{"quad_max", quad_max}, {"identity_max", id_max}};
  return j;
}

inline Json coord_to_json(const FoliationCoord& c) {
  return Json{{"sector", c.sector}, {"u", c.u}, {"v", c.v}};
}

inline FoliationCoord coord_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sector") || !j.contains("u") || !j.contains("v"))
    throw SchemaError("coordinate must be an object with sector, u, v");
  if (!j["sector"].is_number_integer()) throw SchemaError("sector must be an integer");
  return {j["sector"].get<int>(), detail::require_number(j["u"], "u"),
          detail::require_number(j["v"], "v")};
}

inline Json stretch_report_to_json(const StretchReport& r) {
  Json j;
  j["k"] = r.k;
  j["k_i"] = r.k_i;
  j["grid_max"] = r.grid_max;
  j["grid_argmax"] = coord_to_json(r.grid_argmax);
  j["edge_max"] = r.edge_max;
  j["pass"] = r.pass;
  return j;
}

inline TriangulatedSurface surface_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("hexagons") || !j["hexagons"].is_array())
    throw SchemaError("surface needs a \"hexagons\" array");
  std::vector<SurfaceHexagon> hx;
  for (const Json& hj : j["hexagons"]) {
    if (!hj.is_object() || !hj.contains("id") || !hj["id"].is_string())
      throw SchemaError("each hexagon needs a string \"id\"");
    hx.push_back({hj["id"].get<std::string>(), hexagon_from_json(hj)});
  }
  std::vector<Gluing> gl;
  if (j.contains("gluings")) {
    if (!j["gluings"].is_array()) throw SchemaError("\"gluings\" must be an array");
    for (const Json& gj : j["gluings"]) {
      auto edge = [&](const char* key) -> EdgeRef {
        if (!gj.is_object() || !gj.contains(key) || !gj[key].is_array() || gj[key].size() != 2 ||
            !gj[key][0].is_string() || !gj[key][1].is_number_integer())
          throw SchemaError(std::string("gluing \"") + key + "\" must be [hexagon id, edge index]");
        return {gj[key][0].get<std::string>(), gj[key][1].get<int>()};
      };
      Gluing g{edge("a"), edge("b"), false};
      if (gj.contains("reversed")) {
        if (!gj["reversed"].is_boolean()) throw SchemaError("\"reversed\" must be a boolean");
        g.reversed = gj["reversed"].get<bool>();
      }
      gl.push_back(g);
    }
  }
  bool free_edges = false;
  if (j.contains("free_long_edges")) {
    if (!j["free_long_edges"].is_boolean())
      throw SchemaError("\"free_long_edges\" must be a boolean");
    free_edges = j["free_long_edges"].get<bool>();
  }
  return TriangulatedSurface(std::move(hx), std::move(gl), free_edges);
}

inline Json surface_to_json(const TriangulatedSurface& s) {
  Json j;
  j["hexagons"] = Json::array();
  for (const auto& h : s.hexagons()) {
    Json hj = hexagon_to_json(h.shape);
    Json withid;
    withid["id"] = h.id;
    for (auto it = hj.begin(); it != hj.end(); ++it) withid[it.key()] = it.value();
    j["hexagons"].push_back(withid);
  }
  j["gluings"] = Json::array();
  for (const Gluing& g : s.gluings())
    j["gluings"].push_back(Json{{"a", Json::array({g.a.hexagon, g.a.edge})},
                                {"b", Json::array({g.b.hexagon, g.b.edge})},
                                {"reversed", g.reversed}});
  if (s.allows_free_long_edges()) j["free_long_edges"] = true;
  return j;
}

inline Json violations_to_json(const std::vector<Violation>& v) {
  Json j;
  j["valid"] = v.empty();
  j["violations"] = Json::array();
  for (const Violation& x : v) {
    Json vj{{"what", x.what}};
    if (x.mismatch != 0.0) vj["mismatch"] = x.mismatch;
    j["violations"].push_back(vj);
  }
  return j;
}

inline Json boundary_report_to_json(const BoundaryReport& rep) {
  Json j;
  j["cycles"] = Json::array();
  for (const BoundaryCycle& c : rep.cycles) {
    Json cj;
    cj["length"] = c.length;
    cj["steps"] = Json::array();
    for (const BoundaryStep& st : c.steps) {
      Json sj{{"hexagon", st.hexagon}, {"short_edge", st.short_edge}, {"forward", st.forward}};
      if (!st.crossed_long.empty()) sj["crossed"] = st.crossed_long;
      cj["steps"].push_back(sj);
    }
    j["cycles"].push_back(cj);
  }
  j["trace_errors"] = Json::array();
  for (const TraceError& e : rep.trace_errors)
    j["trace_errors"].push_back(
        Json{{"message", e.message}, {"hexagon", e.at.hexagon}, {"edge", e.at.edge}});
  return j;
}

inline Json certificate_to_json(const MetricCertificate& c) {
  Json j;
  j["K1"] = c.K1;
  j["K2"] = c.K2;
  j["lower_bound"] = c.lower_bound;
  j["upper_bound"] = c.upper_bound;
  j["gap"] = c.gap;
  j["geodesic_grade"] = c.geodesic_grade;
  return j;
}

}  // namespace hexstretch
