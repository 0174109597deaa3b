#pragma once

// Shared helpers for the test suites: seeded generators for admissible
// shapes and quadrature-backed measurement oracles.

#include <array>
#include <cmath>
#include <random>
#include <utility>

#include "hexstretch/disc.hpp"
#include "hexstretch/embedding.hpp"
#include "hexstretch/hexagon.hpp"
#include "hexstretch/lambert.hpp"
#include "hexstretch/quadrature.hpp"

namespace testsupport {

using namespace hexstretch;

inline double uni(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Uniform point with Euclidean radius below box (rejection from the square).
inline DiscPoint random_disc_point(std::mt19937_64& rng, double box = 0.8) {
  for (;;) {
    double x = uni(rng, -box, box), y = uni(rng, -box, box);
    if (x * x + y * y < box * box) return DiscPoint{x, y};
  }
}

// Half-long triple that admits a hexagon: cosh of the largest entry must be
// strictly below the sum of the other two cosh values.
inline std::array<double, 3> random_solvable_triple(std::mt19937_64& rng,
                                                    double lo = 0.2,
                                                    double hi = 3.0) {
  for (;;) {
    std::array<double, 3> ell = {uni(rng, lo, hi), uni(rng, lo, hi),
                                 uni(rng, lo, hi)};
    std::array<double, 3> c = {std::cosh(ell[0]), std::cosh(ell[1]),
                               std::cosh(ell[2])};
    double cmax = std::max({c[0], c[1], c[2]});
    if (cmax < c[0] + c[1] + c[2] - cmax - 1e-6) return ell;
  }
}

// Admissible (alpha, d) pair for a trirectangular quadrilateral, bounded
// away from the ideal limit sin(alpha) cosh(d) = 1.
inline std::pair<double, double> random_quad_input(std::mt19937_64& rng,
                                                   bool obtuse) {
  for (;;) {
    double alpha = obtuse ? uni(rng, kHalfPi + 0.05, kPi - 0.05)
                          : uni(rng, 0.05, kHalfPi - 0.05);
    double d = uni(rng, 0.05, 4.0);
    if (std::sin(alpha) * std::cosh(d) > 1.0 + 1e-6) return {alpha, d};
  }
}

inline HexagonShape random_type1_hexagon(std::mt19937_64& rng,
                                         double lo = 0.4, double hi = 2.0) {
  for (;;) {
    HexagonShape h = hexagon_from_half_longs(random_solvable_triple(rng, lo, hi));
    if (h.type == HexType::I) return h;
  }
}

// |cos| of the angle at p between two geodesics through p; 0 iff they meet
// at a right angle, so it doubles as the perpendicularity residual.
inline double perp_residual(const Geodesic& g1, const Geodesic& g2,
                            const DiscPoint& p) {
  Complex t1 = g1.tangent_at(p);
  Complex t2 = g2.tangent_at(p);
  return std::abs(t1.real() * t2.real() + t1.imag() * t2.imag()) /
         (std::abs(t1) * std::abs(t2));
}

// Random point inside the given embedding, by rejection sampling.
inline DiscPoint random_point_inside(std::mt19937_64& rng,
                                     const EmbeddedHexagon& emb) {
  for (;;) {
    DiscPoint p = random_disc_point(rng, 0.99);
    if (emb.contains(p)) return p;
  }
}

}  // namespace testsupport
