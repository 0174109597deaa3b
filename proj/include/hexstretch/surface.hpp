#pragma once

// Bordered hyperbolic surfaces assembled from right-angled hexagons glued
// along long edges. Everything here is combinatorial plus per-hexagon
// intrinsic geometry; no global developing map is built.
//
// Long edges are gluing seams, short edges lie on the surface boundary.
// A boundary component alternates short edges and corner crossings: at each
// corner it crosses a glued long edge into the neighbouring hexagon. With
// reversed = false the gluing matches the two edges' v0 corners (and their
// v2 corners); reversed = true swaps the ends.

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hexstretch/deform.hpp"
#include "hexstretch/hexagon.hpp"

namespace hexstretch {

struct EdgeRef {
  std::string hexagon;
  int edge = 0;  // long-edge index, 0..2

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.hexagon == b.hexagon && a.edge == b.edge;
  }
  friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
    return a.hexagon != b.hexagon ? a.hexagon < b.hexagon : a.edge < b.edge;
  }
  std::string str() const { return hexagon + ":s" + std::to_string(edge + 1); }
};

struct Gluing {
  EdgeRef a, b;
  bool reversed = false;
};

struct SurfaceHexagon {
  std::string id;
  HexagonShape shape;
};

struct Violation {
  std::string what;
  double mismatch = 0.0;  // length gap for mismatch violations, else 0
};

struct BoundaryStep {
  std::string hexagon;
  int short_edge = 0;        // 0..2
  bool forward = true;       // true: traversed corner_v2(m+1) -> corner_v0(m+2)
  std::string crossed_long;  // edge id crossed at the end of this step ("" if trace broke)
};

struct BoundaryCycle {
  std::vector<BoundaryStep> steps;
  double length = 0.0;  // sum of the traversed short edges' lambda
};

struct TraceError {
  std::string message;
  EdgeRef at;
};

struct BoundaryReport {
  std::vector<BoundaryCycle> cycles;
  std::vector<TraceError> trace_errors;
};

class TriangulatedSurface {
 public:
  TriangulatedSurface() = default;
  TriangulatedSurface(std::vector<SurfaceHexagon> hexagons, std::vector<Gluing> gluings,
                      bool allow_free_long_edges = false)
      : hexagons_(std::move(hexagons)),
        gluings_(std::move(gluings)),
        allow_free_(allow_free_long_edges) {
    for (size_t i = 0; i < hexagons_.size(); ++i) index_[hexagons_[i].id] = i;
  }

  const std::vector<SurfaceHexagon>& hexagons() const { return hexagons_; }
  const std::vector<Gluing>& gluings() const { return gluings_; }
  bool allows_free_long_edges() const { return allow_free_; }

  const SurfaceHexagon* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &hexagons_[it->second];
  }

  // Partner of a glued edge end: (other edge, reversed flag).
  std::optional<std::pair<EdgeRef, bool>> partner(const EdgeRef& e) const {
    for (const Gluing& g : gluings_) {
      if (g.a == e) return std::make_pair(g.b, g.reversed);
      if (g.b == e) return std::make_pair(g.a, g.reversed);
    }
    return std::nullopt;
  }

 private:
  std::vector<SurfaceHexagon> hexagons_;
  std::vector<Gluing> gluings_;
  bool allow_free_ = false;
  std::map<std::string, size_t> index_;
};

inline std::vector<Violation> validate(const TriangulatedSurface& s, double len_tol = 1e-9) {
  std::vector<Violation> out;
  std::map<std::string, int> seen_ids;
  for (const auto& h : s.hexagons()) ++seen_ids[h.id];
  for (const auto& [id, n] : seen_ids)
    if (n > 1) out.push_back({"duplicate hexagon id \"" + id + "\"", 0.0});

  std::map<EdgeRef, int> uses;
  for (const Gluing& g : s.gluings()) {
    bool refs_ok = true;
    for (const EdgeRef* e : {&g.a, &g.b}) {
      if (!s.find(e->hexagon)) {
        out.push_back({"gluing references unknown hexagon \"" + e->hexagon + "\"", 0.0});
        refs_ok = false;
      }
      if (e->edge < 0 || e->edge > 2) {
        out.push_back({"gluing references long-edge index " + std::to_string(e->edge) +
                           " (must be 0..2)",
                       0.0});
        refs_ok = false;
      }
    }
    if (!refs_ok) continue;
    if (g.a == g.b) {
      out.push_back({"edge " + g.a.str() + " glued to itself", 0.0});
      continue;
    }
    ++uses[g.a];
    ++uses[g.b];
    const double la = s.find(g.a.hexagon)->shape.ell[g.a.edge];
    const double lb = s.find(g.b.hexagon)->shape.ell[g.b.edge];
    const double gap = std::abs(la - lb);
    if (gap > len_tol * std::max(1.0, std::max(la, lb)))
      out.push_back({"glued edges " + g.a.str() + " and " + g.b.str() +
                         " have mismatched half-lengths " + std::to_string(la) + " vs " +
                         std::to_string(lb),
                     gap});
  }
  for (const auto& [e, n] : uses)
    if (n > 1) out.push_back({"edge " + e.str() + " appears in " + std::to_string(n) + " gluings", 0.0});
  if (!s.allows_free_long_edges()) {
    for (const auto& h : s.hexagons())
      for (int e = 0; e < 3; ++e)
        if (!uses.count({h.id, e}))
          out.push_back({"long edge " + EdgeRef{h.id, e}.str() +
                             " is unglued (enable free long edges to allow a surface with corners)",
                         0.0});
  }
  return out;
}

namespace detail {

// Corner bookkeeping for boundary traces. A short edge t_m of one hexagon,
// walked forward (+param, the counterclockwise sense), starts at corner_v2 of
// long edge m+1 and ends at corner_v0 of long edge m+2.
struct CornerState {
  std::string hex;
  int short_edge;
  bool forward;
};

inline bool operator==(const CornerState& x, const CornerState& y) {
  return x.hex == y.hex && x.short_edge == y.short_edge && x.forward == y.forward;
}

}  // namespace detail

inline BoundaryReport boundary_cycles(const TriangulatedSurface& s) {
  BoundaryReport rep;
  std::map<std::pair<std::string, int>, bool> visited;
  for (const auto& h : s.hexagons())
    for (int m = 0; m < 3; ++m) visited[{h.id, m}] = false;

  for (const auto& h0 : s.hexagons()) {
    for (int m0 = 0; m0 < 3; ++m0) {
      if (visited[{h0.id, m0}]) continue;
      BoundaryCycle cyc;
      detail::CornerState cur{h0.id, m0, true};
      const detail::CornerState start = cur;
      bool broken = false;
      do {
        visited[{cur.hex, cur.short_edge}] = true;
        const SurfaceHexagon* hx = s.find(cur.hex);
        BoundaryStep step{cur.hex, cur.short_edge, cur.forward, ""};
        cyc.length += hx->shape.lambda[cur.short_edge];
        // End corner of this walk: forward lands on corner_v0(m+2), backward
        // on corner_v2(m+1).
        const int long_edge = (cur.short_edge + (cur.forward ? 2 : 1)) % 3;
        const bool at_v0 = cur.forward;
        const EdgeRef here{cur.hex, long_edge};
        const auto mate = s.partner(here);
        if (!mate) {
          rep.trace_errors.push_back(
              {"boundary trace hit unglued long edge " + here.str(), here});
          cyc.steps.push_back(step);
          broken = true;
          break;
        }
        step.crossed_long = here.str() + "-" + mate->first.str();
        cyc.steps.push_back(step);
        const EdgeRef to = mate->first;
        const bool to_v0 = mate->second ? !at_v0 : at_v0;
        // Landing on corner_v0(n) continues along short edge n+1 walked
        // backward; corner_v2(n) continues along n+2 walked forward.
        cur.hex = to.hexagon;
        cur.short_edge = (to.edge + (to_v0 ? 1 : 2)) % 3;
        cur.forward = !to_v0;
      } while (!(cur == start));
      (void)broken;  // partial traces are recorded too, next to their trace error
      rep.cycles.push_back(std::move(cyc));
    }
  }
  return rep;
}

inline TriangulatedSurface deform_surface(const TriangulatedSurface& s, double K) {
  std::vector<SurfaceHexagon> hx;
  hx.reserve(s.hexagons().size());
  for (const auto& h : s.hexagons()) {
    try {
      hx.push_back({h.id, DeformationFamily::make_deformed(h.shape, K)});
    } catch (const DomainError& e) {
      throw DomainError("hexagon \"" + h.id + "\": " + e.what());
    }
  }
  return TriangulatedSurface(std::move(hx), s.gluings(), s.allows_free_long_edges());
}

struct SurfaceStretch {
  double k = 0.0;
  std::vector<std::pair<Gluing, double>> per_edge;  // glued edge, its ratio k_e
};

// Largest hexagon-wise stretch for deforming s by K, with per-glued-edge
// ratios (computable from either side; they agree because cosh scales
// identically).
inline SurfaceStretch surface_k(const TriangulatedSurface& s, double K) {
  SurfaceStretch out;
  std::map<std::string, std::array<double, 3>> ratios;
  for (const auto& h : s.hexagons()) {
    const HexagonShape def = DeformationFamily::make_deformed(h.shape, K);
    std::array<double, 3> r{};
    for (int i = 0; i < 3; ++i) {
      r[i] = def.ell[i] / h.shape.ell[i];
      out.k = std::max(out.k, r[i]);
    }
    ratios[h.id] = r;
  }
  for (const Gluing& g : s.gluings())
    out.per_edge.push_back({g, ratios.at(g.a.hexagon)[g.a.edge]});
  return out;
}

struct MetricCertificate {
  double K1 = 1.0, K2 = 1.0;
  double lower_bound = 0.0;  // log of the max arc-length ratio over glued long edges
  double upper_bound = 0.0;  // log of the hexagon-wise extremal Lipschitz constant
  double gap = 0.0;
  bool geodesic_grade = false;  // gap <= 1e-10
};

// Sandwich certificate that the K-path from s at K1 to s at K2 is geodesic
// for both the arc metric (lower) and the Lipschitz metric (upper).
inline MetricCertificate arc_certificate(const TriangulatedSurface& s, double K1, double K2) {
  if (!(K1 > 0.0) || !(K2 > 0.0) || !std::isfinite(K1) || !std::isfinite(K2))
    throw DomainError("arc_certificate: K1 and K2 must be finite and positive");
  MetricCertificate cert;
  cert.K1 = K1;
  cert.K2 = K2;
  const TriangulatedSurface s1 = deform_surface(s, K1);
  const TriangulatedSurface s2 = deform_surface(s, K2);
  double best = -std::numeric_limits<double>::infinity();
  bool any = false;
  for (const Gluing& g : s1.gluings()) {
    const double l1 = s1.find(g.a.hexagon)->shape.ell[g.a.edge];
    const double l2 = s2.find(g.a.hexagon)->shape.ell[g.a.edge];
    best = std::max(best, std::log(l2 / l1));
    any = true;
  }
  if (!any) throw DomainError("arc_certificate: surface has no glued long edges");
  cert.lower_bound = best;
  cert.upper_bound = std::log(surface_k(s1, K2 / K1).k);
  cert.gap = cert.upper_bound - cert.lower_bound;
  cert.geodesic_grade = std::abs(cert.gap) <= 1e-10;
  return cert;
}

// Luo radius coordinate of a glued edge: mean of the two adjacent sectors'
// transverse widths L (signed).
inline double luo_radius(const TriangulatedSurface& s, const EdgeRef& e) {
  const auto mate = s.partner(e);
  if (!mate) throw DomainError("luo_radius: edge " + e.str() + " is not glued");
  const SurfaceHexagon* ha = s.find(e.hexagon);
  const SurfaceHexagon* hb = s.find(mate->first.hexagon);
  if (!ha || !hb) throw DomainError("luo_radius: edge references unknown hexagon");
  return 0.5 * (ha->shape.L[e.edge] + hb->shape.L[mate->first.edge]);
}

using EdgeCycle = std::vector<EdgeRef>;

// Sum of Luo radii over a caller-supplied edge cycle (with multiplicity).
inline double cycle_sum(const TriangulatedSurface& s, const EdgeCycle& c) {
  double sum = 0.0;
  for (const EdgeRef& e : c) sum += luo_radius(s, e);
  return sum;
}

// Corner-crossing cycle of a traced boundary: the long edges crossed, in order.
inline EdgeCycle corner_crossing_cycle(const TriangulatedSurface& s, const BoundaryCycle& cyc) {
  EdgeCycle out;
  for (const BoundaryStep& st : cyc.steps) {
    if (st.crossed_long.empty()) continue;
    const int long_edge = (st.short_edge + (st.forward ? 2 : 1)) % 3;
    out.push_back({st.hexagon, long_edge});
  }
  (void)s;
  return out;
}

}  // namespace hexstretch
