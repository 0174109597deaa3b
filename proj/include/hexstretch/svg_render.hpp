#pragma once

// Deterministic SVG renderer for embedded hexagons: disc boundary, the six
// sides, tripod, hypercycle foliation leaves, transverse geodesic leaves,
// central region, and an optional deformed-hexagon overlay.
//
// Geometry is emitted in mathematical coordinates inside a scale(1,-1) group;
// labels are emitted outside it (pre-flipped) so text stays upright. Every
// coordinate is fixed to six decimals, so identical input yields identical
// bytes.

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "hexstretch/deform.hpp"
#include "hexstretch/embedding.hpp"

namespace hexstretch {

struct RenderSpec {
  int width_px = 800;
  bool show_foliation_f = false;
  bool show_foliation_g = false;
  bool show_tripod = false;
  bool show_central_region = false;
  bool show_labels = false;
  int leaf_count_f = 8;
  int leaf_count_g = 8;
  std::optional<double> overlay_K;
};

namespace detail {

inline std::string fmt6(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

inline std::string xy6(Complex z) { return fmt6(z.real()) + " " + fmt6(z.imag()); }

// Circumcircle of three points; nullopt when collinear.
struct Circle {
  Complex c;
  double r;
};
inline std::optional<Circle> circumcircle(Complex a, Complex b, Complex c) {
  const double d = 2.0 * (a.real() * (b.imag() - c.imag()) + b.real() * (c.imag() - a.imag()) +
                          c.real() * (a.imag() - b.imag()));
  if (std::abs(d) < 1e-13 * (std::abs(a - b) + std::abs(b - c) + 1.0)) return std::nullopt;
  const double na = std::norm(a), nb = std::norm(b), nc = std::norm(c);
  const Complex ctr{(na * (b.imag() - c.imag()) + nb * (c.imag() - a.imag()) +
                     nc * (a.imag() - b.imag())) /
                        d,
                    (na * (c.real() - b.real()) + nb * (a.real() - c.real()) +
                     nc * (b.real() - a.real())) /
                        d};
  return Circle{ctr, std::abs(a - ctr)};
}

inline double ccw_gap(double from, double to) {
  double g = std::remainder(to - from, 2.0 * kPi);
  if (g < 0.0) g += 2.0 * kPi;
  return g;
}

// Path fragment "A r r 0 large sweep x y" from p0 to p1 around circle k,
// choosing the side that passes through `via`.
inline std::string arc_to(const Circle& k, Complex p0, Complex p1, Complex via) {
  const double f0 = std::arg(p0 - k.c), f1 = std::arg(p1 - k.c), fv = std::arg(via - k.c);
  const double span_ccw = ccw_gap(f0, f1);
  const bool ccw = ccw_gap(f0, fv) <= span_ccw;
  const double extent = ccw ? span_ccw : 2.0 * kPi - span_ccw;
  const char* large = extent > kPi ? "1" : "0";
  const char* sweep = ccw ? "1" : "0";
  return "A " + fmt6(k.r) + " " + fmt6(k.r) + " 0 " + large + " " + sweep + " " + xy6(p1);
}

// "M .. A/L .." path from p0 to p1 through via (segment when collinear).
inline std::string path_through(Complex p0, Complex via, Complex p1) {
  const auto k = circumcircle(p0, via, p1);
  if (!k) return "M " + xy6(p0) + " L " + xy6(p1);
  return "M " + xy6(p0) + " " + arc_to(*k, p0, p1, via);
}

// Geodesic arc between two disc points (minor arc of the orthogonal circle).
inline std::string geodesic_path(const DiscPoint& a, const DiscPoint& b) {
  const Geodesic g = Geodesic::through(a, b);
  if (g.is_diameter()) return "M " + xy6(a.z()) + " L " + xy6(b.z());
  const Circle k{g.arc_center(), g.arc_radius()};
  const double mid = 0.5 * (g.project(a).param + g.project(b).param);
  return "M " + xy6(a.z()) + " " + arc_to(k, a.z(), b.z(), g.point_at(mid).z());
}

inline void element(std::string& svg, const std::string& cls, const std::string& d) {
  svg += "<path class=\"" + cls + "\" d=\"" + d + "\"/>\n";
}

// Both intersection points of two circles (may be empty).
inline std::vector<Complex> circle_circle(const Circle& A, const Circle& B) {
  const Complex ab = B.c - A.c;
  const double d = std::abs(ab);
  if (d < 1e-15) return {};
  const double a = (d * d + A.r * A.r - B.r * B.r) / (2.0 * d);
  const double h2 = A.r * A.r - a * a;
  if (h2 < 0.0) return {};
  const Complex u = ab / d;
  const Complex base = A.c + a * u;
  const Complex off = std::sqrt(h2) * Complex{-u.imag(), u.real()};
  return {base + off, base - off};
}

}  // namespace detail

class HexagonRenderer {
 public:
  HexagonRenderer(const EmbeddedHexagon& hex, const RenderSpec& spec) : hx_(hex), spec_(spec) {
    if (spec.width_px < 64) throw DomainError("render: width_px must be at least 64");
    if (spec.leaf_count_f < 0 || spec.leaf_count_g < 0)
      throw DomainError("render: leaf counts must be non-negative");
  }

  std::string svg() const {
    std::string out;
    const std::string w = std::to_string(spec_.width_px);
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + w +
           "\" viewBox=\"-1.1 -1.1 2.2 2.2\">\n";
    out += style_block();
    out += "<g transform=\"scale(1,-1)\">\n";
    out += "<circle class=\"disc-boundary\" cx=\"0\" cy=\"0\" r=\"1\"/>\n";
    if (spec_.show_central_region) central_region(out);
    if (spec_.show_foliation_f) leaves_f(out);
    if (spec_.show_foliation_g) leaves_g(out);
    if (spec_.show_tripod) tripod(out);
    sides(out, hx_, "");
    if (spec_.overlay_K) {
      const DeformationFamily fam(hx_.shape(), *spec_.overlay_K);
      sides(out, fam.deformed_embedding(), "overlay ");
    }
    out += "</g>\n";
    if (spec_.show_labels) labels(out);
    out += "</svg>\n";
    return out;
  }

 private:
  static std::string style_block() {
    return "<style>\n"
           "path,circle{fill:none;stroke-width:0.006}\n"
           ".disc-boundary{stroke:#888}\n"
           ".edge-long{stroke:#1a4f8a}\n"
           ".edge-short{stroke:#a03030}\n"
           ".tripod{stroke:#222;stroke-dasharray:0.02 0.012}\n"
           ".central-region{fill:#f2c94c55;stroke:none}\n"
           ".leafF{stroke:#2e8b57;stroke-width:0.003}\n"
           ".leafG{stroke:#9955bb;stroke-width:0.003}\n"
           ".overlay{stroke:#777;stroke-dasharray:0.014 0.01}\n"
           ".label{font-size:0.08px;fill:#111;stroke:none;font-family:sans-serif}\n"
           "</style>\n";
  }

  static void sides(std::string& out, const EmbeddedHexagon& h, const std::string& prefix) {
    for (int i = 0; i < 3; ++i)
      detail::element(out, prefix + "edge edge-long",
                      detail::geodesic_path(h.corner_v0(i), h.corner_v2(i)));
    // Short edge t_m joins corner_v2(m+1) and corner_v0(m+2) on short line m.
    for (int m = 0; m < 3; ++m)
      detail::element(out, prefix + "edge edge-short",
                      detail::geodesic_path(h.corner_v2((m + 1) % 3), h.corner_v0((m + 2) % 3)));
  }

  void tripod(std::string& out) const {
    for (int i = 0; i < 3; ++i)
      detail::element(out, "tripod", "M 0 0 L " + detail::xy6(hx_.foot(i).z()));
  }

  // Hypercycle leaf of sector i at chart height u, as endpoint/via points.
  struct LeafPts {
    Complex p0, via, p1;
  };
  std::optional<LeafPts> leaf_points(int i, double u) const {
    try {
      const Complex p0 = hx_.coord_to_point({i + 1, u, 0.0}).z();
      const Complex via = hx_.coord_to_point({i + 1, u, 1.0}).z();
      const Complex p1 = hx_.coord_to_point({i + 1, u, 2.0}).z();
      return LeafPts{p0, via, p1};
    } catch (const Error&) {
      return std::nullopt;  // clipped away (type III) or degenerate sector
    }
  }

  void leaves_f(std::string& out) const {
    const int n = spec_.leaf_count_f;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(hx_.shape().L[i]) <= 1e-10) continue;
      for (int j = 1; j <= n; ++j) {
        const double u = 2.0 * j / (n + 1);
        if (const auto pts = leaf_points(i, u))
          detail::element(out, "leafF", detail::path_through(pts->p0, pts->via, pts->p1));
      }
    }
  }

  void leaves_g(std::string& out) const {
    const int n = spec_.leaf_count_g;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(hx_.shape().L[i]) <= 1e-10) continue;
      for (int j = 1; j <= n; ++j) {
        const double v = 2.0 * j / (n + 1);
        try {
          const DiscPoint a = hx_.coord_to_point({i + 1, 0.0, v});
          const DiscPoint b = hx_.coord_to_point({i + 1, 1.0, v});
          detail::element(out, "leafG", detail::geodesic_path(a, b));
        } catch (const Error&) {
          // clipped away in a type III sector
        }
      }
    }
  }

  void central_region(std::string& out) const {
    const HexagonShape& sh = hx_.shape();
    if (sh.type != HexType::III) {
      // Three boundary leaves, foot to foot around the hub.
      std::string d;
      bool first = true;
      for (int i = 0; i < 3; ++i) {
        const auto pts = leaf_points(i, 1.0);
        if (!pts) return;
        if (first) d = "M " + detail::xy6(pts->p0);
        first = false;
        const auto k = detail::circumcircle(pts->p0, pts->via, pts->p1);
        d += k ? " " + detail::arc_to(*k, pts->p0, pts->p1, pts->via)
               : " L " + detail::xy6(pts->p1);
      }
      detail::element(out, "central-region", d + " Z");
      return;
    }
    central_region_clipped(out);
  }

  // Type III: the hub region is cut by the long edge of the negative sector;
  // its boundary is two hypercycle arcs plus a piece of that edge.
  void central_region_clipped(std::string& out) const {
    const HexagonShape& sh = hx_.shape();
    int neg = 0;
    for (int i = 0; i < 3; ++i)
      if (sh.L[i] < sh.L[neg]) neg = i;
    const int j = (neg + 1) % 3, k = (neg + 2) % 3;

    const Geodesic& cut = hx_.long_line(neg);
    const detail::Circle cutc{cut.arc_center(), cut.arc_radius()};
    auto crossing = [&](int sect) -> std::optional<std::pair<Complex, detail::Circle>> {
      const auto pts = leaf_points(sect, 1.0);
      if (!pts) return std::nullopt;
      const auto leafc = detail::circumcircle(pts->p0, pts->via, pts->p1);
      if (!leafc) return std::nullopt;
      Complex best{0.0, 0.0};
      double score = -1.0;
      for (const Complex z : detail::circle_circle(*leafc, cutc)) {
        if (std::abs(z) >= 1.0) continue;
        const double s = hx_.contains(DiscPoint{z}, 1e-9) ? 2.0 - std::abs(z) : 0.5 - std::abs(z);
        if (s > score) {
          score = s;
          best = z;
        }
      }
      if (score < 0.0) return std::nullopt;
      return std::make_pair(best, *leafc);
    };

    const auto xa = crossing(j);  // leaf of sector j runs A_k -> A_neg, exits through the cut
    const auto xb = crossing(k);  // leaf of sector k runs A_neg -> A_j
    if (!xa || !xb) return;
    const Complex a_in = hx_.foot(neg).z();
    std::string d = "M " + detail::xy6(xa->first);
    d += " " + detail::arc_to(xa->second, xa->first, a_in, midpoint_on(xa->second, xa->first, a_in));
    d += " " + detail::arc_to(xb->second, a_in, xb->first, midpoint_on(xb->second, a_in, xb->first));
    // Close along the cutting edge.
    const double pa = cut.project(DiscPoint{xa->first}).param;
    const double pb = cut.project(DiscPoint{xb->first}).param;
    d += " " + detail::arc_to(cutc, xb->first, xa->first,
                              cut.point_at(0.5 * (pa + pb)).z());
    detail::element(out, "central-region", d + " Z");
  }

  // Waypoint on the minor arc between two points of a circle.
  static Complex midpoint_on(const detail::Circle& c, Complex p, Complex q) {
    const Complex m = 0.5 * (p + q) - c.c;
    const double n = std::abs(m);
    if (n < 1e-14) return c.c + c.r * Complex{-(p - c.c).imag(), (p - c.c).real()} / c.r;
    return c.c + c.r * m / n;
  }

  void labels(std::string& out) const {
    auto text = [&](Complex at, const std::string& s) {
      out += "<text class=\"label\" x=\"" + detail::fmt6(at.real()) + "\" y=\"" +
             detail::fmt6(-at.imag()) + "\">" + s + "</text>\n";
    };
    text(Complex{0.02, 0.02}, "O");
    for (int i = 0; i < 3; ++i) {
      text(hx_.foot(i).z() * 1.12, "A" + std::to_string(i + 1));
      const Complex c = hx_.long_line(i).point_at(0.0).z();
      text(c * 1.14, "s" + std::to_string(i + 1));
    }
  }

  const EmbeddedHexagon& hx_;
  RenderSpec spec_;
};

inline std::string render_svg(const HexagonShape& shape, const RenderSpec& spec) {
  const EmbeddedHexagon hx(shape);
  return HexagonRenderer(hx, spec).svg();
}

}  // namespace hexstretch
