#include <cmath>
#include <random>

#include "doctest.h"
#include "hexstretch/lambert.hpp"
#include "support.hpp"

using namespace hexstretch;
using testsupport::random_quad_input;
using testsupport::uni;

namespace {
double max_residual(const QuadShape& q) {
  double m = 0.0;
  for (double r : quad_residuals(q)) m = std::max(m, r);
  return m;
}
}  // namespace

TEST_CASE("regular-hexagon sector fixture") {
  // alpha = pi/3 and cosh(d) = cosh(1)/sin(pi/3) puts the far side at ell = 1
  const double d = 1.1806577213326162;
  QuadShape q = quad_from_alpha_d(kPi / 3.0, d);
  CHECK(q.ell == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(q.L == doctest::Approx(0.41356845081927851).epsilon(1e-14));
  CHECK(q.h == doctest::Approx(0.28603121498390294).epsilon(1e-13));
  CHECK(q.s_param == doctest::Approx(std::tanh(0.5 * d)).epsilon(1e-15));
  CHECK(max_residual(q) < 1e-12);
}

TEST_CASE("all seven side relations close on random acute and obtuse inputs") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 300; ++it) {
    auto [alpha, d] = random_quad_input(rng, it % 2 == 1);
    QuadShape q = quad_from_alpha_d(alpha, d);
    CAPTURE(alpha);
    CAPTURE(d);
    CHECK(max_residual(q) < 1e-10);
    // sign law: the strip width carries the sign of pi/2 - alpha
    if (alpha != kHalfPi) CHECK(q.L * (kHalfPi - alpha) > 0.0);
    CHECK(q.h * q.L >= 0.0);
    CHECK(q.ell > 0.0);
    // t = s cos(alpha) / (1 + sin(alpha))
    double t = q.s_param * std::cos(alpha) / (1.0 + std::sin(alpha));
    CHECK(q.t_param == doctest::Approx(t).epsilon(1e-13));
  }
}

TEST_CASE("degenerate sector at alpha = pi/2") {
  QuadShape q = quad_degenerate(1.7);
  CHECK(q.alpha == kHalfPi);
  CHECK(q.L == 0.0);
  CHECK(q.h == 0.0);
  CHECK(q.ell == 1.7);
  CHECK(q.t_param == 0.0);
  CHECK(max_residual(q) < 1e-12);
  CHECK_THROWS_AS(quad_degenerate(0.0), DomainError);
}

TEST_CASE("inadmissible and ideal inputs are rejected") {
  // sin(alpha) cosh(d) < 1: no such quadrilateral
  CHECK_THROWS_AS(quad_from_alpha_d(0.1, 0.5), DomainError);
  CHECK_THROWS_AS(quad_from_alpha_d(kPi - 0.05, 0.2), DomainError);
  CHECK_THROWS_AS(quad_from_alpha_d(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(quad_from_alpha_d(kPi, 1.0), DomainError);
  CHECK_THROWS_AS(quad_from_alpha_d(1.0, -1.0), DomainError);
  // exactly on the branch point: ideal vertex
  double d = 2.0;
  double alpha = std::asin(1.0 / std::cosh(d));
  CHECK_THROWS_AS(quad_from_alpha_d(alpha, d), IdealLimitError);
}

TEST_CASE("width from the Euclidean foot radius") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 200; ++it) {
    auto [alpha, d] = random_quad_input(rng, it % 2 == 0);
    QuadShape q = quad_from_alpha_d(alpha, d);
    CHECK(quad_width_from_radius(alpha, q.s_param) ==
          doctest::Approx(q.L).epsilon(1e-10));
  }
  CHECK(quad_width_from_radius(kHalfPi, 0.4) == 0.0);
  // s = 2 - sqrt(3) at alpha = pi/3 puts tanh(L) exactly at 1
  CHECK_THROWS_AS(quad_width_from_radius(kPi / 3.0, 2.0 - std::sqrt(3.0)),
                  IdealLimitError);
  CHECK_THROWS_AS(quad_width_from_radius(kPi / 3.0, 0.05), DomainError);
  CHECK_THROWS_AS(quad_width_from_radius(0.5, 0.0), DomainError);
  CHECK_THROWS_AS(quad_width_from_radius(0.5, 1.0), DomainError);
}

TEST_CASE("width after stretching the far side") {
  std::mt19937_64 rng(23);
  // K = 1 must reproduce the direct construction through either route
  for (int it = 0; it < 100; ++it) {
    auto [alpha, d] = random_quad_input(rng, it % 2 == 0);
    QuadShape q = quad_from_alpha_d(alpha, d);
    CHECK(quad_width_after_stretch(alpha, q.ell, 1.0) ==
          doctest::Approx(q.L).epsilon(1e-10));
  }

  // strictly decreasing in K, vanishing once K ell is large
  const double alpha = kPi / 3.0, ell = 1.0;
  double prev = std::abs(quad_width_after_stretch(alpha, ell, 1.0));
  for (double K : {1.5, 2.0, 3.0, 5.0, 8.0, 12.0}) {
    double cur = std::abs(quad_width_after_stretch(alpha, ell, K));
    CHECK(cur < prev);
    prev = cur;
  }
  // the closed-form width measure tanh^2 L = cos^2 a / (cosh^2 Kl - sin^2 a)
  // drops below 1e-6 once K ell reaches 10 (|L| itself is then ~ 2 cos(a) e^-10)
  auto sq = [](double x) { return x * x; };
  CHECK(sq(std::tanh(quad_width_after_stretch(alpha, ell, 10.0))) < 1e-6);
  CHECK(sq(std::tanh(quad_width_after_stretch(alpha, 2.0, 5.0))) < 1e-6);
  CHECK(std::abs(quad_width_after_stretch(alpha, ell, 10.0)) < 1e-4);

  // obtuse hub angle keeps the negative sign for every K
  CHECK(quad_width_after_stretch(2.0, 1.0, 3.0) < 0.0);
  CHECK(quad_width_after_stretch(1.0, 1.0, 3.0) > 0.0);

  CHECK_THROWS_AS(quad_width_after_stretch(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(quad_width_after_stretch(1.0, -1.0, 2.0), DomainError);
  CHECK_THROWS_AS(quad_width_after_stretch(0.0, 1.0, 2.0), DomainError);
  // K ell ~ 0 pushes tanh(L) onto 1: ideal configuration
  CHECK_THROWS_AS(quad_width_after_stretch(1.0, 1e-8, 1e-4), DomainError);
}

TEST_CASE("closed forms at alpha = pi/3, s = 2 - sqrt(3)") {
  const double s = 2.0 - std::sqrt(3.0);
  const double alpha = kPi / 3.0;
  // artanh argument hits 1 exactly at this radius
  const double w = (std::cos(alpha) / std::sin(alpha)) * (1.0 - s * s) / (2.0 * s);
  CHECK(std::abs(w) == doctest::Approx(1.0).epsilon(1e-12));
  // and the hub-leaf midpoint radius collapses to s^2
  const double t = s * std::cos(alpha) / (1.0 + std::sin(alpha));
  CHECK(t == doctest::Approx(s * s).epsilon(1e-12));
}
