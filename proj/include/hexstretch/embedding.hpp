#pragma once

// Canonical embedding of a right-angled hexagon in the Poincare disc and the
// per-sector foliation charts.
//
// The hub O sits at the origin. The feet A_i of the perpendiculars from O to
// the short-edge lines sit at hyperbolic radius d, at polar angles
//   A_1: alpha_1 + 2 alpha_2,   A_2: -alpha_1,   A_3: +alpha_1,
// so sector i (the doubled quadrilateral holding long edge s_i) spans the
// wedge from ray OA_{i+1} (its v = 0 side) counterclockwise by 2 alpha_i.
//
// Chart of sector i: u in [0,1] moves off the long edge along hypercycle
// leaves at distance u|L_i|; u in (1,2] continues through the hub region with
// leaf endpoints on the tripod edges at arc (u-1)d from the feet; v in [0,2]
// is arc-length position along the leaf. (i, 0, 1) is the midpoint of s_i,
// (i, 2, 1) is O.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hexstretch/disc.hpp"
#include "hexstretch/hexagon.hpp"

namespace hexstretch {

struct FoliationCoord {
  int sector;  // 1-based: 1, 2, 3
  double u;    // [0, 2]
  double v;    // [0, 2]
};

class EmbeddedHexagon {
 public:
  explicit EmbeddedHexagon(const HexagonShape& shape) : shape_(shape) {
    for (double e : shape.ell) {
      if (!(e > 1e-12))
        throw DegenerateError("embed: a long edge has (near-)zero half-length");
    }
    foot_angle_[0] = shape.alpha[0] + 2.0 * shape.alpha[1];
    foot_angle_[1] = -shape.alpha[0];
    foot_angle_[2] = shape.alpha[0];
    for (int i = 0; i < 3; ++i) feet_[i] = point_polar(foot_angle_[i], shape.d);
    for (int i = 0; i < 3; ++i)
      short_lines_[i] = Geodesic::radial_perpendicular(foot_angle_[i], shape.d);
    // Short lines are oriented counterclockwise at their foot, so +param at
    // A_j walks into sector j-1; corner_v0(i) lives on the line through
    // A_{i+1}, corner_v2(i) on the line through A_{i+2}.
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3, k = (i + 2) % 3;
      corner_v0_[i] = short_lines_[j].point_at(shape.L[i]);
      corner_v2_[i] = short_lines_[k].point_at(-shape.L[i]);
      long_lines_[i] = Geodesic::through(corner_v0_[i], corner_v2_[i]);
    }
    const DiscPoint o = DiscPoint::origin();
    for (int i = 0; i < 3; ++i) {
      const auto pr = long_lines_[i].project(o);
      oside_[i] = (pr.signed_dist >= 0.0) ? 1.0 : -1.0;
      dist_o_long_[i] = std::abs(pr.signed_dist);
    }
    // Reference interior point: centroid in the Klein model, where the
    // hexagon is Euclidean-convex.
    Complex kc{0.0, 0.0};
    for (int i = 0; i < 3; ++i) {
      kc += 2.0 * corner_v0_[i].z() / (1.0 + std::norm(corner_v0_[i].z()));
      kc += 2.0 * corner_v2_[i].z() / (1.0 + std::norm(corner_v2_[i].z()));
    }
    kc /= 6.0;
    const DiscPoint ref{kc / (1.0 + std::sqrt(std::max(0.0, 1.0 - std::norm(kc))))};
    for (int i = 0; i < 3; ++i) {
      inside_long_[i] = (long_lines_[i].project(ref).signed_dist >= 0.0) ? 1.0 : -1.0;
      inside_short_[i] = (short_lines_[i].project(ref).signed_dist >= 0.0) ? 1.0 : -1.0;
    }
  }

  const HexagonShape& shape() const { return shape_; }
  const DiscPoint& foot(int i) const { return feet_[i]; }
  double foot_angle(int i) const { return foot_angle_[i]; }
  const Geodesic& long_line(int i) const { return long_lines_[i]; }
  const Geodesic& short_line(int i) const { return short_lines_[i]; }
  const DiscPoint& corner_v0(int i) const { return corner_v0_[i]; }
  const DiscPoint& corner_v2(int i) const { return corner_v2_[i]; }
  double central_corner_radius() const { return std::tanh(0.5 * shape_.d); }
  double hub_clearance(int i) const { return dist_o_long_[i]; }

  // Distance between leaf u of sector i and the long line s_i. Linear in u on
  // the band; on the hub it follows the tripod edge, reaching the hub
  // clearance at u = 2.
  double leaf_offset(int i, double u) const {
    if (i < 0 || i > 2 || !(u >= -1e-12 && u <= 2.0 + 1e-12))
      throw DomainError("leaf_offset: need sector 0..2 and u in [0,2]");
    if (u <= 1.0) return std::max(0.0, u) * std::abs(shape_.L[i]);
    if (u >= 2.0 - 1e-15) return dist_o_long_[i];
    if (shape_.L[i] <= 1e-10)
      throw OutOfChartError("leaf_offset: sector " + std::to_string(i + 1) +
                            " has no central part (needs L > 0)");
    const int j = (i + 1) % 3;
    const DiscPoint tj = point_polar(foot_angle_[j], (2.0 - u) * shape_.d);
    return std::abs(long_lines_[i].project(tj).signed_dist);
  }

  // Point at foot parameter sigma on long line i, pushed delta toward the
  // hexagon's side. The (sigma, delta) pair are Fermi coordinates of sector i.
  DiscPoint fermi_point(int i, double sigma, double delta) const {
    if (i < 0 || i > 2) throw DomainError("fermi_point: sector must be 0..2");
    return leaf_point(i, sigma, oside_[i] * delta);
  }

  bool contains(const DiscPoint& p, double tol = 1e-10) const {
    for (int i = 0; i < 3; ++i) {
      if (inside_long_[i] * long_lines_[i].project(p).signed_dist < -tol) return false;
      if (inside_short_[i] * short_lines_[i].project(p).signed_dist < -tol) return false;
    }
    return true;
  }

  // Sector of the angular wedge holding p; ties on a dividing ray go to the
  // lower sector index. 0-based.
  int sector_of(const DiscPoint& p, double angle_tol = 1e-12) const {
    if (p.abs() < 1e-15) return 0;
    const double psi = std::arg(p.z());
    int best = -1;
    for (int i = 0; i < 3; ++i) {
      const int j = (i + 1) % 3;
      double off = std::remainder(psi - foot_angle_[j], 2.0 * kPi);
      if (off < 0.0) off += 2.0 * kPi;
      if (off <= 2.0 * shape_.alpha[i] + angle_tol || off >= 2.0 * kPi - angle_tol) {
        if (best < 0) best = i;
      }
    }
    return best;  // wedges cover the full circle, so best >= 0
  }

  DiscPoint coord_to_point(const FoliationCoord& c) const {
    const int i = check_coord(c);
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double u = std::clamp(c.u, 0.0, 2.0), v = std::clamp(c.v, 0.0, 2.0);
    const double Labs = std::abs(shape_.L[i]);

    DiscPoint p = DiscPoint::origin();
    if (u >= 2.0 - 1e-15) {
      // p stays at the hub; u = 2 names {O} in every sector
    } else if (u <= 1.0) {
      const double sigma = (v - 1.0) * shape_.ell[i];
      p = leaf_point(i, sigma, oside_[i] * u * Labs);
    } else {
      if (shape_.L[i] <= 1e-10)
        throw OutOfChartError("coord_to_point: sector " + std::to_string(i + 1) +
                              " has no central part (needs L > 0)");
      const DiscPoint tj = point_polar(foot_angle_[j], (2.0 - u) * shape_.d);
      const DiscPoint tk = point_polar(foot_angle_[k], (2.0 - u) * shape_.d);
      const auto pj = long_lines_[i].project(tj);
      const auto pk = long_lines_[i].project(tk);
      const double sigma = pj.param + 0.5 * v * (pk.param - pj.param);
      p = leaf_point(i, sigma, oside_[i] * std::abs(pj.signed_dist));
    }
    if (shape_.type == HexType::III && !contains(p, 1e-10))
      throw OutOfChartError("coord_to_point: coordinate names a point outside the hexagon");
    return p;
  }

  FoliationCoord point_to_coord(const DiscPoint& p) const {
    if (!contains(p, 1e-10))
      throw OutsideHexagonError("point_to_coord: (" + std::to_string(p.x()) + ", " +
                                std::to_string(p.y()) + ") is not inside the hexagon");
    return coord_in_sector(p, sector_of(p) + 1);
  }

  // Chart lookup with the sector fixed (1-based); p must lie in that sector's
  // charted closure.
  FoliationCoord coord_in_sector(const DiscPoint& p, int sector) const {
    if (sector < 1 || sector > 3) throw DomainError("coord_in_sector: sector must be 1..3");
    const int i = sector - 1;
    if (p.abs() < 1e-15) return {sector, 2.0, 1.0};
    const auto pr = long_lines_[i].project(p);
    if (pr.signed_dist * oside_[i] < -1e-9)
      throw OutOfChartError("coord_in_sector: point lies beyond the long edge of sector " +
                            std::to_string(sector));
    const double delta = std::abs(pr.signed_dist);
    const double Labs = std::abs(shape_.L[i]);

    FoliationCoord out{sector, 0.0, 0.0};
    if (delta <= Labs) {
      out.u = Labs > 0.0 ? delta / Labs : 0.0;
      out.v = std::clamp(1.0 + pr.param / shape_.ell[i], 0.0, 2.0);
      return out;
    }
    if (shape_.L[i] <= 1e-10) {
      if (delta <= Labs + 1e-9) {  // tolerance band at the chart's outer leaf
        out.u = Labs > 1e-10 ? 1.0 : 0.0;
        out.v = std::clamp(1.0 + pr.param / shape_.ell[i], 0.0, 2.0);
        return out;
      }
      throw OutOfChartError("coord_in_sector: sector " + std::to_string(sector) +
                            " charts only the u <= 1 band (L <= 0 leaves no central part)");
    }

    // Hub region: distance to the long line grows monotonically along the
    // tripod edges from L_i at the feet to the hub clearance at O.
    const int j = (i + 1) % 3, k = (i + 2) % 3;
    const double target = std::min(delta, dist_o_long_[i]);
    double lo = 1.0, hi = 2.0;
    for (int it = 0; it < 64 && hi - lo > 1e-14; ++it) {
      const double m = 0.5 * (lo + hi);
      const double dm = std::abs(
          long_lines_[i].project(point_polar(foot_angle_[j], (2.0 - m) * shape_.d)).signed_dist);
      (dm < target ? lo : hi) = m;
    }
    out.u = 0.5 * (lo + hi);
    const auto pj = long_lines_[i].project(point_polar(foot_angle_[j], (2.0 - out.u) * shape_.d));
    const auto pk = long_lines_[i].project(point_polar(foot_angle_[k], (2.0 - out.u) * shape_.d));
    const double span = pk.param - pj.param;
    out.v = (std::abs(span) < 1e-13) ? 1.0 : std::clamp(2.0 * (pr.param - pj.param) / span, 0.0, 2.0);
    return out;
  }

 private:
  int check_coord(const FoliationCoord& c) const {
    if (c.sector < 1 || c.sector > 3)
      throw DomainError("coord_to_point: sector must be 1..3");
    if (!(c.u >= -1e-12 && c.u <= 2.0 + 1e-12) || !(c.v >= -1e-12 && c.v <= 2.0 + 1e-12))
      throw DomainError("coord_to_point: (u, v) must lie in [0,2] x [0,2]");
    return c.sector - 1;
  }

  // Point at the given signed distance from long line i above foot parameter sigma.
  DiscPoint leaf_point(int i, double sigma, double signed_delta) const {
    const DiscPoint f = long_lines_[i].point_at(sigma);
    if (signed_delta == 0.0) return f;
    const Complex t = long_lines_[i].tangent_at(f);
    return walk(f, Complex{-t.imag(), t.real()}, signed_delta);
  }

  HexagonShape shape_;
  std::array<double, 3> foot_angle_;
  std::array<DiscPoint, 3> feet_;
  std::array<Geodesic, 3> short_lines_;
  std::array<Geodesic, 3> long_lines_;
  std::array<DiscPoint, 3> corner_v0_, corner_v2_;
  std::array<double, 3> oside_;
  std::array<double, 3> dist_o_long_;
  std::array<double, 3> inside_long_, inside_short_;
};

inline EmbeddedHexagon embed(const HexagonShape& shape) { return EmbeddedHexagon(shape); }

}  // namespace hexstretch
