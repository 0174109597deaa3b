#pragma once

// Right-angled hexagons H(alpha_1..3, d): three hub sectors, each a doubled
// Lambert quadrilateral with half-angle alpha_i and hub edge d. Long edges
// have half-length ell_i = arccosh(sin(alpha_i) cosh d), short edges lambda_i
// = L_j + L_k (signed widths). Types: I (all L_i > 0), II (some L_i = 0),
// III (one L_i < 0).

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <string>

#include "hexstretch/lambert.hpp"

namespace hexstretch {

enum class HexType { I, II, III };

inline const char* to_string(HexType t) {
  switch (t) {
    case HexType::I: return "I";
    case HexType::II: return "II";
    default: return "III";
  }
}

struct HexagonShape {
  std::array<double, 3> alpha;   // sector half-angles, sum pi
  double d;                      // hub edge length
  std::array<double, 3> ell;     // long-edge half-lengths
  std::array<double, 3> L;       // strip widths (signed)
  std::array<double, 3> lambda;  // short-edge lengths, lambda_i = L_j + L_k
  std::array<double, 3> h;       // hub clearance excess per sector (signed)
  HexType type;
};

namespace detail {

inline HexType classify_by_widths(const std::array<double, 3>& L, double tol = 1e-10) {
  bool zero = false, neg = false;
  for (double v : L) {
    if (std::abs(v) <= tol) zero = true;
    else if (v < 0.0) neg = true;
  }
  if (zero) return HexType::II;
  return neg ? HexType::III : HexType::I;
}

}  // namespace detail

// Type from the short-edge lengths alone: TypeI iff all strict triangle
// inequalities hold, TypeII iff one is an equality (relative tol), TypeIII
// otherwise.
inline HexType classify_short_edges(const std::array<double, 3>& lam) {
  for (double v : lam) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("classify_short_edges: lengths must be positive");
  }
  const double tol = 1e-12 * (lam[0] + lam[1] + lam[2]);
  bool eq = false, neg = false;
  for (int i = 0; i < 3; ++i) {
    const double margin = lam[(i + 1) % 3] + lam[(i + 2) % 3] - lam[i];
    if (std::abs(margin) <= tol) eq = true;
    else if (margin < 0.0) neg = true;
  }
  if (eq) return HexType::II;
  return neg ? HexType::III : HexType::I;
}

inline HexagonShape hexagon_from_angles(std::array<double, 3> alpha, double d) {
  for (double a : alpha) {
    if (!(a > 0.0 && a < kPi) || !std::isfinite(a))
      throw DomainError("hexagon_from_angles: each alpha must lie in (0, pi)");
  }
  const double sum = alpha[0] + alpha[1] + alpha[2];
  if (std::abs(sum - kPi) > 1e-9)
    throw DomainError("hexagon_from_angles: alpha sum off pi by " + std::to_string(sum - kPi));
  if (sum != kPi) {
    const double scale = kPi / sum;
    for (double& a : alpha) a *= scale;
  }
  int obtuse = 0;
  for (double a : alpha)
    if (a >= kHalfPi) ++obtuse;
  if (obtuse > 1)
    throw DomainError("hexagon_from_angles: at most one alpha may reach pi/2");
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError("hexagon_from_angles: d must be positive and finite");

  HexagonShape hx;
  hx.alpha = alpha;
  hx.d = d;
  for (int i = 0; i < 3; ++i) {
    try {
      const QuadShape q = (alpha[i] == kHalfPi) ? quad_degenerate(d)
                                                : quad_from_alpha_d(alpha[i], d);
      hx.ell[i] = q.ell;
      hx.L[i] = q.L;
      hx.h[i] = q.h;
    } catch (const IdealLimitError& e) {
      throw IdealLimitError("sector " + std::to_string(i + 1) + ": " + e.what());
    } catch (const DomainError& e) {
      throw DomainError("sector " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  for (int i = 0; i < 3; ++i) hx.lambda[i] = hx.L[(i + 1) % 3] + hx.L[(i + 2) % 3];
  hx.type = detail::classify_by_widths(hx.L);
  return hx;
}

// Residuals of the classical right-angled hexagon relation
// cosh(lambda_k) = sinh(lambda_i) sinh(lambda_j) cosh(2 ell_k) - cosh(lambda_i) cosh(lambda_j),
// an independent consistency oracle over the solved shape.
inline std::array<double, 3> hexagon_identity_residuals(const HexagonShape& hx) {
  std::array<double, 3> r;
  for (int k = 0; k < 3; ++k) {
    const int i = (k + 1) % 3, j = (k + 2) % 3;
    r[k] = std::abs(std::cosh(hx.lambda[k]) -
                    (std::sinh(hx.lambda[i]) * std::sinh(hx.lambda[j]) * std::cosh(2.0 * hx.ell[k]) -
                     std::cosh(hx.lambda[i]) * std::cosh(hx.lambda[j])));
  }
  return r;
}

namespace detail {

// Angle sum Sigma alpha_i(d) for given long-edge coshes, on the all-acute
// branch or with the obtuse branch at index jmax. Terms are accumulated in
// a fixed value order so the result is permutation-invariant.
inline double angle_sum(const std::array<double, 3>& c, double d, bool obtuse, int jmax) {
  const double chd = std::cosh(d);
  std::array<double, 3> terms;
  for (int i = 0; i < 3; ++i) {
    const double a = std::asin(std::min(1.0, c[i] / chd));
    terms[i] = (obtuse && i == jmax) ? kPi - a : a;
  }
  std::sort(terms.begin(), terms.end());
  return terms[0] + terms[1] + terms[2];
}

inline double angle_sum_deriv(const std::array<double, 3>& c, double d, bool obtuse, int jmax) {
  const double chd = std::cosh(d), shd = std::sinh(d);
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double root = std::sqrt(std::max(0.0, chd * chd - c[i] * c[i]));
    if (root == 0.0) return std::numeric_limits<double>::infinity();
    const double term = c[i] * shd / (chd * root);
    s += (obtuse && i == jmax) ? term : -term;
  }
  return s;
}

}  // namespace detail

// Solves for the hexagon with the prescribed long-edge half-lengths via 1D
// root-finding of the angle-sum equation in d. Realizable iff
// cosh(ell_max) < cosh(ell_mid) + cosh(ell_min), strictly.
inline HexagonShape hexagon_from_half_longs(const std::array<double, 3>& ell) {
  for (double v : ell) {
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError("hexagon_from_half_longs: half-lengths must be positive");
  }
  std::array<double, 3> c{std::cosh(ell[0]), std::cosh(ell[1]), std::cosh(ell[2])};
  const int jmax = int(std::max_element(c.begin(), c.end()) - c.begin());
  const double others = c[(jmax + 1) % 3] + c[(jmax + 2) % 3];
  if (c[jmax] >= others) {
    throw DomainError(
        "hexagon_from_half_longs: no tripod decomposition exists; requires "
        "cosh(l_max) < cosh(l_mid) + cosh(l_min) strictly (" +
        std::to_string(c[jmax]) + " >= " + std::to_string(others) + ")");
  }

  const double dmax = *std::max_element(ell.begin(), ell.end());
  const double lo0 = dmax + 1e-12;
  const bool obtuse = detail::angle_sum(c, lo0, false, jmax) < kPi;

  auto f = [&](double d) { return detail::angle_sum(c, d, obtuse, jmax) - kPi; };

  // Acute branch: f decreasing from >= 0; obtuse branch: f < 0 at lo and
  // eventually > 0 (admissibility). Expand the upper bound until signs differ.
  double lo = lo0, hi = std::max(2.0 * lo0, lo0 + 1.0);
  const double flo = f(lo);
  int expand = 0;
  for (; expand < 200; ++expand) {
    const double fhi = f(hi);
    if ((flo >= 0.0 && fhi <= 0.0) || (flo <= 0.0 && fhi >= 0.0)) break;
    hi *= 2.0;
    if (!std::isfinite(std::cosh(hi))) break;
  }
  if (expand >= 200 || !std::isfinite(std::cosh(hi))) {
    throw ConvergenceError(
        "hexagon_from_half_longs: no bracket after bound expansion (branch " +
        std::string(obtuse ? "obtuse" : "acute") + ", f(lo) = " + std::to_string(flo) +
        ", last hi = " + std::to_string(hi) + ")");
  }

  double a = lo, b = hi, fa = flo;
  while (b - a > 1e-14) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if ((fa <= 0.0) == (fm <= 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  double d = 0.5 * (a + b);
  for (int it = 0; it < 3; ++it) {  // Newton polish within the bracket
    const double fd = f(d), dfd = detail::angle_sum_deriv(c, d, obtuse, jmax);
    if (!std::isfinite(dfd) || dfd == 0.0) break;
    const double next = d - fd / dfd;
    if (!(next > a && next < b)) break;
    d = next;
  }

  std::array<double, 3> alpha;
  const double chd = std::cosh(d);
  for (int i = 0; i < 3; ++i) {
    const double v = std::asin(std::min(1.0, c[i] / chd));
    alpha[i] = (obtuse && i == jmax) ? kPi - v : v;
  }
  HexagonShape hx = hexagon_from_angles(alpha, d);
  for (int i = 0; i < 3; ++i) {
    if (std::abs(hx.ell[i] - ell[i]) > 1e-10) {
      throw ConvergenceError("hexagon_from_half_longs: rebuilt half-length " +
                             std::to_string(i + 1) + " off by " +
                             std::to_string(hx.ell[i] - ell[i]));
    }
  }
  return hx;
}

}  // namespace hexstretch
