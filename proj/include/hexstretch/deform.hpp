#pragma once

// One-parameter deformation of a right-angled hexagon and the piecewise
// extremal map between base and deformed copies.
//
// The family scales cosh d by K, which keeps the tripod angles fixed and
// multiplies cosh of each long-edge half-length by K:
//   ell_i(K) = acosh(K cosh ell_i).
// The extremal map is the identity in foliation coordinates. Its largest
// stretch k = max_i ell_i(K)/ell_i is attained exactly on the long edges of
// maximal ratio; everywhere else the leafwise stretch is strictly smaller
// and the transverse direction contracts.

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hexstretch/embedding.hpp"
#include "hexstretch/hexagon.hpp"

namespace hexstretch {

// Smallest admissible K for this shape (exclusive bound).
inline double deformation_k_min(const HexagonShape& h) {
  const double ell_min = *std::min_element(h.ell.begin(), h.ell.end());
  return 1.0 / std::cosh(ell_min);
}

struct StretchReport {
  double k = 0.0;
  std::array<double, 3> k_i{};
  double grid_max = 0.0;
  FoliationCoord grid_argmax{1, 0.0, 0.0};
  double edge_max = 0.0;
  bool pass = false;
  int skipped_cells = 0;  // chart gaps (type III sectors); not serialized
};

class DeformationFamily {
 public:
  DeformationFamily(const HexagonShape& base, double K)
      : base_(base), K_(K), base_embed_(base), deformed_embed_(make_deformed(base, K)) {
    for (int i = 0; i < 3; ++i) k_i_[i] = deformed().ell[i] / base_.ell[i];
    argmax_edge_ = int(std::max_element(k_i_.begin(), k_i_.end()) - k_i_.begin());
    k_ = k_i_[argmax_edge_];
  }

  static HexagonShape make_deformed(const HexagonShape& base, double K) {
    if (!(K > 0.0) || !std::isfinite(K))
      throw DomainError("deform: K must be finite and positive");
    const double kmin = deformation_k_min(base);
    if (K <= kmin)
      throw DomainError("deform: K = " + std::to_string(K) +
                        " collapses the shortest long edge; need K > " + std::to_string(kmin));
    const double chd = K * std::cosh(base.d);
    HexagonShape out = hexagon_from_angles(base.alpha, acosh1p(chd - 1.0));
    out.alpha = base.alpha;  // carried over unchanged, never renormalized
    return out;
  }

  const HexagonShape& base() const { return base_; }
  const HexagonShape& deformed() const { return deformed_embed_.shape(); }
  double K() const { return K_; }
  double k() const { return k_; }
  const std::array<double, 3>& edge_ratios() const { return k_i_; }
  int argmax_edge() const { return argmax_edge_; }
  const EmbeddedHexagon& base_embedding() const { return base_embed_; }
  const EmbeddedHexagon& deformed_embedding() const { return deformed_embed_; }

  // f_k: keeps the leaf index u and scales long-line foot parameters by k_i,
  // so fibers of the nearest-point projection onto s_i go to fibers. This is
  // what bounds the differential: the leaf direction stretches by
  // k_i cosh(delta_K)/cosh(delta) <= k_i and the fiber direction by the local
  // leaf-spacing ratio, which peaks at d(K)/d < k at the hub. Renormalizing v
  // per leaf instead would shear unboundedly where the leaves meet the tripod.
  DiscPoint map_point(const DiscPoint& p) const {
    const FoliationCoord c = base_embed_.point_to_coord(p);
    if (c.u >= 2.0 - 1e-15) return DiscPoint::origin();
    const int i = c.sector - 1;
    const double sigma = base_embed_.long_line(i).project(p).param;
    return deformed_embed_.fermi_point(i, k_i_[i] * sigma, deformed_embed_.leaf_offset(i, c.u));
  }
  DiscPoint map_coord(const FoliationCoord& c) const {
    return map_point(base_embed_.coord_to_point(c));
  }

  // Stretch along the leaf at transverse position u in sector i (0-based).
  // Arc elements: a leaf at height uL over a dv step has length ell cosh(uL) dv,
  // so the chart-identity map multiplies it by k_i cosh(uL^K)/cosh(uL) <= k_i.
  double leaf_stretch(int i, double u) const {
    check_sector(i);
    if (!(u >= 0.0 && u <= 1.0))
      throw DomainError("leaf_stretch: u must lie in [0,1]");
    if (base_.L[i] < 0.0)
      throw DomainError("leaf_stretch: sector " + std::to_string(i + 1) +
                        " has no rectangle part (L < 0)");
    return k_i_[i] * std::cosh(u * deformed().L[i]) / std::cosh(u * base_.L[i]);
  }

  // Stretch across the leaves (independent of u); < 1 for K > 1.
  double transverse_contraction(int i) const {
    check_sector(i);
    if (!(base_.L[i] > 0.0))
      throw DomainError("transverse_contraction: needs a positive-width sector");
    return deformed().L[i] / base_.L[i];
  }

 private:
  static void check_sector(int i) {
    if (i < 0 || i > 2) throw DomainError("sector index must be 0..2");
  }

  HexagonShape base_;
  double K_;
  EmbeddedHexagon base_embed_;
  EmbeddedHexagon deformed_embed_;
  std::array<double, 3> k_i_{};
  double k_ = 0.0;
  int argmax_edge_ = 0;
};

inline DeformationFamily deform(const HexagonShape& base, double K) {
  return DeformationFamily(base, K);
}

// Largest singular value of a 2x2 matrix given by columns (a,c) and (b,d).
inline double fd_singular_max(double a, double b, double c, double d) {
  const double s1 = std::hypot(a + d, c - b);
  const double s2 = std::hypot(a - d, c + b);
  return 0.5 * (s1 + s2);
}

// Numerical check that f_k is k-Lipschitz and that k is attained on an edge.
// Samples the pointwise differential norm on a half-offset grid in each
// charted sector and compares edge-restricted difference quotients against k.
inline StretchReport verify_lipschitz(const DeformationFamily& fam, int grid_n = 24,
                                      double fd_step = 1e-5, double slack = 1e-4) {
  if (grid_n < 16) throw DomainError("verify_lipschitz: grid must be at least 16");
  const EmbeddedHexagon& be = fam.base_embedding();
  StretchReport rep;
  rep.k = fam.k();
  rep.k_i = fam.edge_ratios();

  const Complex ex{1.0, 0.0}, ey{0.0, 1.0};
  for (int s = 0; s < 3; ++s) {
    if (std::abs(fam.base().L[s]) <= 1e-10) continue;  // no 2d chart to sample
    for (int a = 0; a < grid_n; ++a) {
      for (int b = 0; b < grid_n; ++b) {
        const FoliationCoord c{s + 1, 2.0 * (a + 0.5) / grid_n, 2.0 * (b + 0.5) / grid_n};
        try {
          const DiscPoint p = be.coord_to_point(c);
          const DiscPoint fp = fam.map_point(p);
          const Complex gx = (log_map(fp, fam.map_point(walk(p, ex, fd_step))) -
                              log_map(fp, fam.map_point(walk(p, ex, -fd_step)))) /
                             (2.0 * fd_step);
          const Complex gy = (log_map(fp, fam.map_point(walk(p, ey, fd_step))) -
                              log_map(fp, fam.map_point(walk(p, ey, -fd_step)))) /
                             (2.0 * fd_step);
          const double smax = fd_singular_max(gx.real(), gy.real(), gx.imag(), gy.imag());
          if (smax > rep.grid_max) {
            rep.grid_max = smax;
            rep.grid_argmax = c;
          }
        } catch (const Error&) {
          ++rep.skipped_cells;  // probe left the charted region
        }
      }
    }
  }

  // Difference quotients along the maximally stretched long edge.
  const int e = fam.argmax_edge();
  const double dv = fd_step / fam.base().ell[e];
  for (int b = 0; b <= grid_n; ++b) {
    const double v = 2.0 * b / grid_n;
    const double v0 = std::max(0.0, v - dv), v1 = std::min(2.0, v + dv);
    const DiscPoint q0 = be.coord_to_point({e + 1, 0.0, v0});
    const DiscPoint q1 = be.coord_to_point({e + 1, 0.0, v1});
    const DiscPoint w0 = fam.map_coord({e + 1, 0.0, v0});
    const DiscPoint w1 = fam.map_coord({e + 1, 0.0, v1});
    rep.edge_max = std::max(rep.edge_max, dist(w0, w1) / dist(q0, q1));
  }

  rep.pass = rep.grid_max <= rep.k * (1.0 + slack) && rep.edge_max >= rep.k * (1.0 - slack);
  return rep;
}

}  // namespace hexstretch
