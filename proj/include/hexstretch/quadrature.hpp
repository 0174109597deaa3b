#pragma once

// Independent length oracles: adaptive Simpson quadrature of the hyperbolic
// line element along Euclidean arcs and segments. These are measurement
// routes for tests and certificates; the main computational paths use closed
// forms only.

#include <cmath>
#include <complex>
#include <functional>

#include "hexstretch/disc.hpp"
#include "hexstretch/errors.hpp"

namespace hexstretch {

namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Hyperbolic length of the Euclidean circular arc t -> c + rho e^{it}, t in [t0, t1].
inline double arc_hyperbolic_length(Complex c, double rho, double t0, double t1,
                                    double tol = 1e-10) {
  auto f = [&](double t) {
    const Complex z = c + std::polar(rho, t);
    return 2.0 * rho / (1.0 - std::norm(z));
  };
  return std::abs(adaptive_simpson(f, t0, t1, tol));
}

// Hyperbolic length of the Euclidean segment from a to b.
inline double segment_hyperbolic_length(Complex a, Complex b, double tol = 1e-10) {
  const double len = std::abs(b - a);
  if (len == 0.0) return 0.0;
  auto f = [&](double t) {
    const Complex z = a + t * (b - a);
    return 2.0 * len / (1.0 - std::norm(z));
  };
  return adaptive_simpson(f, 0.0, 1.0, tol);
}

namespace detail {

// Angular positions of two points on the circle (c, rho); returns the signed
// sweep of the direct angular path from a to b.
inline double direct_sweep(Complex c, Complex a, Complex b) {
  const double ta = std::arg(a - c), tb = std::arg(b - c);
  return std::remainder(tb - ta, 2.0 * std::acos(-1.0));
}

}  // namespace detail

// Quadrature along the geodesic through p and q; an independent route to dist().
inline double dist_by_quadrature(const DiscPoint& p, const DiscPoint& q, double tol = 1e-10) {
  if (std::abs(p.z() - q.z()) == 0.0) return 0.0;
  const Geodesic g = Geodesic::through(p, q);
  if (g.is_diameter()) return segment_hyperbolic_length(p.z(), q.z(), tol);
  const Complex c = g.arc_center();
  const double t0 = std::arg(p.z() - c);
  return arc_hyperbolic_length(c, g.arc_radius(), t0, t0 + detail::direct_sweep(c, p.z(), q.z()), tol);
}

// Measured length between two points lying on a common geodesic.
inline double geodesic_length_between(const Geodesic& g, const DiscPoint& a, const DiscPoint& b,
                                      double tol = 1e-10) {
  if (g.is_diameter()) return segment_hyperbolic_length(a.z(), b.z(), tol);
  const Complex c = g.arc_center();
  const double t0 = std::arg(a.z() - c);
  return arc_hyperbolic_length(c, g.arc_radius(), t0, t0 + detail::direct_sweep(c, a.z(), b.z()), tol);
}

// Arc length along the hypercycle locus between two on-locus points.
// Inputs more than 1e-10 off the locus are rejected.
inline double hypercycle_arclength(const Hypercycle& h, const DiscPoint& a, const DiscPoint& b,
                                   double tol = 1e-10) {
  for (const DiscPoint* p : {&a, &b}) {
    const auto pr = h.axis.project(*p);
    if (std::abs(pr.signed_dist - h.signed_distance) > 1e-10)
      throw DomainError("hypercycle_arclength: point off the locus by " +
                        std::to_string(std::abs(pr.signed_dist - h.signed_distance)));
  }
  if (std::abs(a.z() - b.z()) == 0.0) return 0.0;
  if (h.signed_distance == 0.0) return geodesic_length_between(h.axis, a, b, tol);

  // The locus is the Euclidean circle (or chord) through the axis ideal
  // endpoints and any locus point; recover it from three points.
  const double sa = h.axis.project(a).param;
  const double sb = h.axis.project(b).param;
  const Complex p1 = a.z(), p3 = b.z();
  const Complex p2 = h.point_at(0.5 * (sa + sb)).z();
  const Complex d21 = p2 - p1, d31 = p3 - p1;
  const double cr = detail::cross2(d21, d31);
  if (std::abs(cr) < 1e-13 * std::abs(d21) * std::abs(d31))
    return segment_hyperbolic_length(p1, p3, tol);
  const double n21 = std::norm(d21), n31 = std::norm(d31);
  const Complex c = p1 + Complex{(d31.imag() * n21 - d21.imag() * n31) / (2.0 * cr),
                                 (d21.real() * n31 - d31.real() * n21) / (2.0 * cr)};
  const double rho = std::abs(p1 - c);
  const double t0 = std::arg(p1 - c);
  return arc_hyperbolic_length(c, rho, t0, t0 + detail::direct_sweep(c, p1, p3), tol);
}

}  // namespace hexstretch
