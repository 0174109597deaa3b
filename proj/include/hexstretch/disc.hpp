#pragma once

// Poincare disc kernel: points, geodesics, hypercycles, distances and
// orthogonal projections. The metric is ds = 2|dz| / (1 - |z|^2), so
// dist(p,q) = arccosh(1 + 2|p-q|^2 / ((1-|p|^2)(1-|q|^2))).

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>

#include "hexstretch/errors.hpp"

namespace hexstretch {

using Complex = std::complex<double>;

// Points are kept strictly inside the disc; beyond this radius doubles can no
// longer resolve distinct hyperbolic locations to useful precision.
inline constexpr double kMaxPointRadius = 1.0 - 1e-12;

// arccosh(1 + t) without cancellation for small t >= 0.
inline double acosh1p(double t) {
  if (t < 0) {
    if (t > -1e-12) t = 0;  // tolerate roundoff just below the branch point
    else throw DomainError("acosh1p: argument 1 + t below 1 (t = " + std::to_string(t) + ")");
  }
  return std::log1p(t + std::sqrt(t * (t + 2.0)));
}

class DiscPoint {
 public:
  DiscPoint() = default;
  DiscPoint(double x, double y) : x_(x), y_(y) {
    if (!std::isfinite(x) || !std::isfinite(y) ||
        x * x + y * y > kMaxPointRadius * kMaxPointRadius) {
      throw DomainError("DiscPoint: (" + std::to_string(x) + ", " + std::to_string(y) +
                        ") is not inside the unit disc");
    }
  }
  explicit DiscPoint(Complex z) : DiscPoint(z.real(), z.imag()) {}

  static DiscPoint origin() { return {}; }

  double x() const { return x_; }
  double y() const { return y_; }
  Complex z() const { return {x_, y_}; }
  double abs() const { return std::hypot(x_, y_); }

 private:
  double x_ = 0.0, y_ = 0.0;
};

inline double dist(const DiscPoint& p, const DiscPoint& q) {
  const double dd = std::norm(p.z() - q.z());
  if (dd == 0.0) return 0.0;
  const double t = 2.0 * dd / ((1.0 - std::norm(p.z())) * (1.0 - std::norm(q.z())));
  return acosh1p(t);
}

// Point at polar angle theta and hyperbolic radius r (Euclidean radius tanh(r/2)).
inline DiscPoint point_polar(double theta, double r) {
  if (!(r >= 0) || !std::isfinite(r))
    throw DomainError("point_polar: radius must be finite and non-negative");
  const double e = std::tanh(0.5 * r);
  return {e * std::cos(theta), e * std::sin(theta)};
}

namespace detail {

// Disc automorphism z -> e^{i rot} (z - a) / (1 - conj(a) z).
struct Mobius {
  Complex a{0.0, 0.0};
  double rot = 0.0;

  Complex operator()(Complex z) const {
    return std::polar(1.0, rot) * ((z - a) / (1.0 - std::conj(a) * z));
  }
  Complex inverse(Complex w) const {
    const Complex u = std::polar(1.0, -rot) * w;
    return (u + a) / (1.0 + std::conj(a) * u);
  }
  // d/dw of the inverse map, up to positive real scale enough for directions;
  // exact derivative kept for completeness.
  Complex inverse_deriv(Complex w) const {
    const Complex e = std::polar(1.0, -rot);
    const Complex den = 1.0 + std::conj(a) * e * w;
    return e * (1.0 - std::norm(a)) / (den * den);
  }

  static Mobius to_origin(const DiscPoint& p) { return {p.z(), 0.0}; }
};

inline double cross2(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot2(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

}  // namespace detail

// Travels hyperbolic (signed) distance t from p along the unit direction dir.
// The direction is read in the conformal tangent frame at p, which coincides
// with the Euclidean frame up to positive scale.
inline DiscPoint walk(const DiscPoint& p, Complex dir, double t) {
  const double n = std::abs(dir);
  if (n == 0.0) throw DomainError("walk: zero direction");
  dir /= n;
  const auto T = detail::Mobius::to_origin(p);
  return DiscPoint(T.inverse(std::tanh(0.5 * t) * dir));
}

// Tangent-space logarithm at `base`: unit direction toward q scaled by dist(base, q).
inline Complex log_map(const DiscPoint& base, const DiscPoint& q) {
  const auto T = detail::Mobius::to_origin(base);
  const Complex w = T(q.z());
  const double r = std::abs(w);
  if (r == 0.0) return {0.0, 0.0};
  return (2.0 * std::atanh(r) / r) * w;
}

// Oriented geodesic. Arcs are circles orthogonal to the unit circle
// (|center|^2 = radius^2 + 1); diameters are kept as a separate case.
// The arc-length parameter is zero at the point nearest the origin and
// increases toward the second ideal endpoint.
class Geodesic {
 public:
  struct Projection {
    DiscPoint foot;
    double signed_dist;  // positive on the left of the orientation
    double param;        // arc-length parameter of the foot
  };

  static Geodesic from_ideal(Complex a, Complex b) {
    a /= std::abs(a);
    b /= std::abs(b);
    if (std::abs(a - b) < 1e-12)
      throw DegenerateError("Geodesic: ideal endpoints coincide");
    Geodesic g;
    g.e1_ = a;
    g.e2_ = b;
    if (std::abs(a + b) < 1e-14) {
      g.diameter_ = true;
      g.e1_ = -b;  // snap to an exact diameter
      g.mid_ = {0.0, 0.0};
      g.rot_ = -std::arg(b);
      g.center_ = {0.0, 0.0};
      g.radius_ = 0.0;
      return g;
    }
    const double det = detail::cross2(a, b);
    if (det == 0.0) throw DegenerateError("Geodesic: endpoints neither distinct nor antipodal");
    g.diameter_ = false;
    g.center_ = {(b.imag() - a.imag()) / det, (a.real() - b.real()) / det};
    const double cn = std::abs(g.center_);
    g.radius_ = std::sqrt(std::max(0.0, std::norm(g.center_) - 1.0));
    g.mid_ = (g.center_ / cn) / (cn + g.radius_);  // = c.hat * (|c| - radius), stable form
    const Complex t0 = (g.e2_ - g.mid_) / (1.0 - std::conj(g.mid_) * g.e2_);
    g.rot_ = -std::arg(t0);
    return g;
  }

  // Oriented so the parameter increases from p to q.
  static Geodesic through(const DiscPoint& p, const DiscPoint& q) {
    const Complex zp = p.z(), zq = q.z();
    if (std::abs(zp - zq) < 1e-15)
      throw DegenerateError("geodesic_through: points coincide");
    const double cross = detail::cross2(zp, zq);
    Geodesic g;
    if (std::abs(cross) <= 1e-14 * std::max(1.0, std::abs(zp) * std::abs(zq))) {
      // Collinear with the origin: a diameter along the chord direction.
      Complex u = zq - zp;
      u /= std::abs(u);
      g = from_ideal(-u, u);
    } else {
      // Solve 2<p,c> = 1+|p|^2, 2<q,c> = 1+|q|^2 for the Euclidean center.
      const double rp = 0.5 * (1.0 + std::norm(zp));
      const double rq = 0.5 * (1.0 + std::norm(zq));
      const Complex c{(rp * zq.imag() - rq * zp.imag()) / cross,
                      (rq * zp.real() - rp * zq.real()) / cross};
      const double cn = std::abs(c);
      const double rad = std::sqrt(std::max(0.0, std::norm(c) - 1.0));
      const Complex chat = c / cn;
      const Complex perp{-chat.imag(), chat.real()};
      const Complex ep = c / std::norm(c) + (rad / cn) * perp;
      const Complex em = c / std::norm(c) - (rad / cn) * perp;
      g = from_ideal(em, ep);
      if (g.project(p).param > g.project(q).param) g = from_ideal(ep, em);
    }
    return g;
  }

  // Geodesic crossing the ray at angle theta perpendicularly at signed
  // hyperbolic radial distance r. Oriented so that at the crossing point the
  // travel direction is the ray direction rotated by +90 degrees.
  static Geodesic radial_perpendicular(double theta, double r) {
    const Complex u = std::polar(1.0, theta);
    const Complex iu{-u.imag(), u.real()};
    const double e = std::tanh(0.5 * r);
    if (std::abs(e) < 1e-15) return from_ideal(-iu, iu);
    const double gamma = (1.0 + e * e) / (2.0 * e);
    const Complex c = gamma * u;
    const double rad = (1.0 - e * e) / (2.0 * std::abs(e));
    const Complex chat = c / std::abs(c);
    const Complex perp{-chat.imag(), chat.real()};
    const Complex ep = c / std::norm(c) + (rad / std::abs(c)) * perp;
    const Complex em = c / std::norm(c) - (rad / std::abs(c)) * perp;
    Geodesic g = from_ideal(em, ep);
    const DiscPoint at{e * u};
    if (detail::dot2(g.tangent_at(at), iu) < 0) g = from_ideal(ep, em);
    return g;
  }

  bool is_diameter() const { return diameter_; }
  Complex first_ideal() const { return e1_; }
  Complex second_ideal() const { return e2_; }
  Complex arc_center() const {
    if (diameter_) throw DegenerateError("arc_center: geodesic is a diameter");
    return center_;
  }
  double arc_radius() const {
    if (diameter_) throw DegenerateError("arc_radius: geodesic is a diameter");
    return radius_;
  }

  DiscPoint point_at(double s) const {
    return DiscPoint(frame().inverse(Complex{std::tanh(0.5 * s), 0.0}));
  }

  Projection project(const DiscPoint& p) const {
    const Complex w = frame()(p.z());
    const double x = w.real(), y = w.imag(), n2 = std::norm(w);
    double f = 0.0;
    if (x != 0.0) {
      const double gamma = (1.0 + n2) / (2.0 * std::abs(x));
      f = std::copysign(1.0 / (gamma + std::sqrt(std::max(0.0, gamma * gamma - 1.0))), x);
    }
    Projection out;
    out.param = 2.0 * std::atanh(f);
    out.signed_dist = std::asinh(2.0 * y / (1.0 - n2));
    out.foot = DiscPoint(frame().inverse(Complex{f, 0.0}));
    return out;
  }

  // Unit Euclidean tangent at a point of the locus, along the orientation.
  Complex tangent_at(const DiscPoint& p) const {
    const Complex w = frame()(p.z());
    const Complex d = frame().inverse_deriv(Complex{w.real(), 0.0});
    return d / std::abs(d);
  }

  Geodesic reversed() const { return from_ideal(e2_, e1_); }

 private:
  detail::Mobius frame() const { return {mid_, rot_}; }

  Complex e1_{-1.0, 0.0}, e2_{1.0, 0.0};
  bool diameter_ = true;
  Complex center_{0.0, 0.0};
  double radius_ = 0.0;
  Complex mid_{0.0, 0.0};
  double rot_ = 0.0;
};

inline Geodesic geodesic_through(const DiscPoint& p, const DiscPoint& q) {
  return Geodesic::through(p, q);
}

inline Geodesic::Projection project_to_geodesic(const DiscPoint& p, const Geodesic& g) {
  return g.project(p);
}

// Equidistant locus at signed distance from an oriented geodesic axis
// (positive on the left of the orientation).
struct Hypercycle {
  Geodesic axis;
  double signed_distance = 0.0;

  // Locus point whose axis foot sits at arc-length parameter s.
  DiscPoint point_at(double s) const {
    const DiscPoint f = axis.point_at(s);
    if (signed_distance == 0.0) return f;
    const Complex t = axis.tangent_at(f);
    return walk(f, Complex{-t.imag(), t.real()}, signed_distance);
  }
};

// Interior angle between two unit tangent directions, in [0, pi].
inline double angle_between(Complex t1, Complex t2) {
  const double c = detail::dot2(t1, t2) / (std::abs(t1) * std::abs(t2));
  return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace hexstretch
