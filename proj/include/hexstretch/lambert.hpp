#pragma once

// Trirectangular (Lambert) quadrilateral O-A-B-C: right angles at A, B, C and
// angle alpha at O. Sides: |OA| = d, |AB| = L, |BC| = ell, |CO| = L + h.
// For alpha > pi/2 the widths L and h carry negative signs (the foot divides
// the adjacent side externally); the closed forms below hold in signed form.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hexstretch/disc.hpp"
#include "hexstretch/errors.hpp"

namespace hexstretch {

inline constexpr double kPi = std::numbers::pi_v<double>;
inline constexpr double kHalfPi = kPi / 2.0;

struct QuadShape {
  double alpha;    // angle at the hub vertex O
  double d;        // hub-to-foot side OA
  double ell;      // far side BC
  double L;        // strip width AB (signed)
  double h;        // CO = L + h (signed excess)
  double s_param;  // Euclidean radius of A, i.e. tanh(d/2)
  double t_param;  // signed Euclidean radius of the hub-leaf midpoint M
};

// Degenerate quadrilateral at alpha = pi/2: the strip collapses (L = h = 0)
// and the far side coincides with the hub side length (ell = d).
inline QuadShape quad_degenerate(double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError("quad_degenerate: d must be positive and finite");
  QuadShape q;
  q.alpha = kHalfPi;
  q.d = d;
  q.ell = d;
  q.L = 0.0;
  q.h = 0.0;
  q.s_param = std::tanh(0.5 * d);
  q.t_param = 0.0;
  return q;
}

inline QuadShape quad_from_alpha_d(double alpha, double d) {
  if (!(alpha > 0.0 && alpha < kPi) || !std::isfinite(alpha))
    throw DomainError("quad_from_alpha_d: alpha must lie in (0, pi)");
  if (alpha == kHalfPi)
    throw DegenerateError("quad_from_alpha_d: alpha = pi/2; use quad_degenerate");
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError("quad_from_alpha_d: d must be positive and finite");

  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double che = sa * std::cosh(d);  // cosh(ell)
  if (che < 1.0 - 1e-12) {
    throw DomainError("quad_from_alpha_d: sin(alpha) cosh(d) = " + std::to_string(che) +
                      " < 1; minimal admissible d = " + std::to_string(std::acosh(1.0 / sa)));
  }
  if (che <= 1.0 + 1e-12) {
    throw IdealLimitError("quad_from_alpha_d: at the ideal limit sin(alpha) cosh(d) = 1 "
                          "(ell = 0, |L| infinite)");
  }
  const double w = ca / (sa * std::sinh(d));  // tanh(L)
  if (std::abs(w) >= 1.0)
    throw IdealLimitError("quad_from_alpha_d: tanh(L) argument reached 1");

  QuadShape q;
  q.alpha = alpha;
  q.d = d;
  q.ell = acosh1p(che - 1.0);
  q.L = std::atanh(w);
  const double sgn = (q.L > 0.0) ? 1.0 : -1.0;
  const double Lh = sgn * acosh1p(std::cosh(q.L) / sa - 1.0);  // L + h, same sign as L
  q.h = Lh - q.L;
  q.s_param = std::tanh(0.5 * d);
  q.t_param = q.s_param * ca / (1.0 + sa);
  return q;
}

// Absolute residuals of the seven defining identities; all vanish on exact
// shapes, including the degenerate and signed (obtuse) regimes.
inline std::array<double, 7> quad_residuals(const QuadShape& q) {
  const double sa = std::sin(q.alpha), ca = std::cos(q.alpha);
  const double chd = std::cosh(q.d), shd = std::sinh(q.d);
  const double chl = std::cosh(q.ell), shl = std::sinh(q.ell);
  const double chL = std::cosh(q.L), shL = std::sinh(q.L);
  const double chLh = std::cosh(q.L + q.h), shLh = std::sinh(q.L + q.h);
  return {
      std::max(std::abs(chl - sa * chd), std::abs(shLh - chd * shL)),
      std::abs(shl - (shd * chLh - chd * shLh * ca)),
      std::abs(shd - shl * chLh),
      std::abs(ca - shL * shl),
      std::abs(sa * shL * shd - ca * chL),
      std::abs(chLh - (-shl * shd + chl * chd * chL)),
      std::abs(chL - sa * chLh),
  };
}

// Strip width of the quadrilateral whose hub corner A sits at Euclidean
// radius s: tanh(L) = (cos a / sin a) (1 - s^2) / (2 s).
inline double quad_width_from_radius(double alpha, double s) {
  if (!(alpha > 0.0 && alpha < kPi))
    throw DomainError("quad_width_from_radius: alpha must lie in (0, pi)");
  if (!(s > 0.0 && s < 1.0))
    throw DomainError("quad_width_from_radius: s must lie in (0, 1)");
  if (alpha == kHalfPi) return 0.0;
  const double w = (std::cos(alpha) / std::sin(alpha)) * (1.0 - s * s) / (2.0 * s);
  const double mag = std::abs(w);
  if (std::abs(mag - 1.0) <= 1e-12)
    throw IdealLimitError("quad_width_from_radius: at the ideal limit |tanh L| = 1");
  if (mag > 1.0)
    throw DomainError("quad_width_from_radius: |tanh L| = " + std::to_string(mag) + " > 1");
  return std::atanh(w);
}

// Strip width after the far side is stretched from ell to arccosh(K cosh ell):
// tanh^2 L(K) = cos^2 a / (cosh^2(K ell) - sin^2 a), signed like cos(alpha).
inline double quad_width_after_stretch(double alpha, double ell, double K) {
  if (!(alpha > 0.0 && alpha < kPi))
    throw DomainError("quad_width_after_stretch: alpha must lie in (0, pi)");
  if (!(ell > 0.0) || !(K > 0.0))
    throw DomainError("quad_width_after_stretch: ell and K must be positive");
  if (alpha == kHalfPi) return 0.0;
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double ch = std::cosh(K * ell);
  const double t2 = (ca * ca) / (ch * ch - sa * sa);
  if (t2 >= 1.0 - 1e-15)
    throw DomainError("quad_width_after_stretch: square-root argument reached 1 "
                      "(vanishing stretched edge)");
  return std::copysign(std::atanh(std::sqrt(t2)), ca);
}

}  // namespace hexstretch
