#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "hexstretch/surface.hpp"
#include "support.hpp"

using namespace hexstretch;

namespace {

TriangulatedSurface pants(const std::array<double, 3>& ell) {
  HexagonShape h = hexagon_from_half_longs(ell);
  std::vector<SurfaceHexagon> hx = {{"front", h}, {"back", h}};
  std::vector<Gluing> gl;
  for (int i = 0; i < 3; ++i) gl.push_back({{"front", i}, {"back", i}, false});
  return TriangulatedSurface(hx, gl);
}

// One-holed torus: two copies cross-glued on the equal edges, third edges
// glued straight. Euler characteristic 2 - 3 = -1 with a single boundary.
TriangulatedSurface one_holed_torus() {
  HexagonShape h = hexagon_from_half_longs({0.8, 0.8, 1.2});
  std::vector<SurfaceHexagon> hx = {{"a", h}, {"b", h}};
  std::vector<Gluing> gl = {
      {{"a", 0}, {"b", 1}, false},
      {{"a", 1}, {"b", 0}, false},
      {{"a", 2}, {"b", 2}, false},
  };
  return TriangulatedSurface(hx, gl);
}

bool mentions(const std::vector<Violation>& v, const std::string& needle) {
  for (const auto& x : v)
    if (x.what.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("pair of pants validates cleanly") {
  TriangulatedSurface s = pants({1.0, 1.0, 1.0});
  CHECK(validate(s).empty());
  CHECK_FALSE(s.allows_free_long_edges());
  auto mate = s.partner({"front", 1});
  REQUIRE(mate.has_value());
  CHECK(mate->first == EdgeRef{"back", 1});
  CHECK_FALSE(mate->second);
  CHECK(s.partner({"front", 1}).has_value());
  CHECK(s.find("front") != nullptr);
  CHECK(s.find("nope") == nullptr);
}

TEST_CASE("validate reports each defect") {
  HexagonShape h1 = hexagon_from_half_longs({1.0, 1.0, 1.0});
  HexagonShape h2 = hexagon_from_half_longs({1.1, 1.0, 1.0});

  // mismatched half-lengths on a glued pair
  TriangulatedSurface mism({{"front", h1}, {"back", h2}},
                           {{{"front", 0}, {"back", 0}, false},
                            {{"front", 1}, {"back", 1}, false},
                            {{"front", 2}, {"back", 2}, false}});
  auto v = validate(mism);
  REQUIRE(!v.empty());
  CHECK(mentions(v, "mismatched half-lengths"));
  double gap = 0.0;
  for (const auto& x : v) gap = std::max(gap, x.mismatch);
  CHECK(gap == doctest::Approx(0.1).epsilon(1e-12));

  // an edge used by two gluings
  TriangulatedSurface dbl({{"front", h1}, {"back", h1}},
                          {{{"front", 0}, {"back", 0}, false},
                           {{"front", 0}, {"back", 1}, false},
                           {{"front", 2}, {"back", 2}, false}});
  CHECK(mentions(validate(dbl), "2 gluings"));

  // self-gluing
  TriangulatedSurface self({{"front", h1}, {"back", h1}},
                           {{{"front", 0}, {"front", 0}, false}});
  CHECK(mentions(validate(self), "glued to itself"));

  // unknown hexagon and bad index
  TriangulatedSurface unk({{"front", h1}},
                          {{{"front", 0}, {"ghost", 1}, false},
                           {{"front", 1}, {"front", 5}, false}});
  CHECK(mentions(validate(unk), "unknown hexagon"));
  CHECK(mentions(validate(unk), "long-edge index"));

  // duplicate id
  TriangulatedSurface dup({{"front", h1}, {"front", h1}}, {});
  CHECK(mentions(validate(dup), "duplicate hexagon id"));

  // unglued edge without the opt-in flag
  TriangulatedSurface open({{"front", h1}, {"back", h1}},
                           {{{"front", 0}, {"back", 0}, false}});
  CHECK(mentions(validate(open), "is unglued"));
  TriangulatedSurface open_ok({{"front", h1}, {"back", h1}},
                              {{{"front", 0}, {"back", 0}, false}}, true);
  CHECK(validate(open_ok).empty());
}

TEST_CASE("pants boundary: three cycles of two short edges each") {
  TriangulatedSurface s = pants({1.0, 1.0, 1.0});
  const double lambda = 0.82713690163855702;
  BoundaryReport rep = boundary_cycles(s);
  CHECK(rep.trace_errors.empty());
  REQUIRE(rep.cycles.size() == 3);
  for (const auto& c : rep.cycles) {
    CHECK(c.steps.size() == 2);
    CHECK(c.length == doctest::Approx(2.0 * lambda).epsilon(1e-12));
    // each cycle pairs the same short edge on the two hexagons
    CHECK(c.steps[0].short_edge == c.steps[1].short_edge);
    CHECK(c.steps[0].hexagon != c.steps[1].hexagon);
    for (const auto& st : c.steps) CHECK_FALSE(st.crossed_long.empty());
  }
}

TEST_CASE("asymmetric pants boundary lengths are pairwise distinct") {
  TriangulatedSurface s = pants({0.8, 1.0, 1.2});
  const HexagonShape& h = s.hexagons()[0].shape;
  BoundaryReport rep = boundary_cycles(s);
  REQUIRE(rep.cycles.size() == 3);
  std::array<double, 3> len{};
  for (const auto& c : rep.cycles) len[c.steps[0].short_edge] = c.length;
  for (int m = 0; m < 3; ++m)
    CHECK(len[m] == doctest::Approx(2.0 * h.lambda[m]).epsilon(1e-12));
  CHECK(std::abs(len[0] - len[1]) > 1e-6);
  CHECK(std::abs(len[1] - len[2]) > 1e-6);
  CHECK(std::abs(len[0] - len[2]) > 1e-6);
}

TEST_CASE("one-holed torus has a single boundary cycle over all short edges") {
  TriangulatedSurface s = one_holed_torus();
  CHECK(validate(s).empty());
  BoundaryReport rep = boundary_cycles(s);
  CHECK(rep.trace_errors.empty());
  REQUIRE(rep.cycles.size() == 1);
  CHECK(rep.cycles[0].steps.size() == 6);
  double lam_total = 0.0;
  for (double l : s.hexagons()[0].shape.lambda) lam_total += l;
  CHECK(rep.cycles[0].length == doctest::Approx(2.0 * lam_total).epsilon(1e-12));
}

TEST_CASE("free long edges break the trace loudly when allowed") {
  HexagonShape h = hexagon_from_half_longs({1.0, 1.0, 1.0});
  TriangulatedSurface s({{"front", h}, {"back", h}},
                        {{{"front", 0}, {"back", 0}, false}}, true);
  BoundaryReport rep = boundary_cycles(s);
  CHECK(!rep.trace_errors.empty());
  // every short edge still appears exactly once across the partial cycles
  int steps = 0;
  for (const auto& c : rep.cycles) steps += int(c.steps.size());
  CHECK(steps == 6);
}

TEST_CASE("deform_surface scales every hexagon coherently") {
  TriangulatedSurface s = pants({0.8, 1.0, 1.2});
  for (double K : {1.2, 1.7, 2.5}) {
    TriangulatedSurface d = deform_surface(s, K);
    CHECK(validate(d).empty());  // gluings stay length-matched
    for (size_t i = 0; i < d.hexagons().size(); ++i)
      for (int e = 0; e < 3; ++e)
        CHECK(std::cosh(d.hexagons()[i].shape.ell[e]) ==
              doctest::Approx(K * std::cosh(s.hexagons()[i].shape.ell[e]))
                  .epsilon(1e-12));
  }
  TriangulatedSurface id = deform_surface(s, 1.0);
  for (size_t i = 0; i < id.hexagons().size(); ++i)
    for (int e = 0; e < 3; ++e)
      CHECK(id.hexagons()[i].shape.ell[e] ==
            doctest::Approx(s.hexagons()[i].shape.ell[e]).epsilon(1e-12));
  // inadmissible K names the offending hexagon
  try {
    deform_surface(s, 0.2);
    CHECK(false);
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("hexagon \"front\"") != std::string::npos);
  }
}

TEST_CASE("boundary lengths shrink monotonically as K grows") {
  TriangulatedSurface s = pants({0.8, 1.0, 1.2});
  std::array<double, 3> prev{1e99, 1e99, 1e99};
  for (int n = 0; n < 20; ++n) {
    double K = 1.0 + 0.2 * n;
    BoundaryReport rep = boundary_cycles(deform_surface(s, K));
    REQUIRE(rep.cycles.size() == 3);
    std::array<double, 3> len{};
    for (const auto& c : rep.cycles) len[c.steps[0].short_edge] = c.length;
    for (int m = 0; m < 3; ++m) {
      CHECK(len[m] < prev[m]);
      prev[m] = len[m];
    }
  }
}

TEST_CASE("surface_k and per-edge ratios") {
  TriangulatedSurface s = pants({1.0, 1.0, 1.0});
  SurfaceStretch st = surface_k(s, 2.0);
  CHECK(st.k == doctest::Approx(1.7927285508437945).epsilon(1e-12));
  REQUIRE(st.per_edge.size() == 3);
  for (const auto& [g, ke] : st.per_edge) {
    CHECK(ke == doctest::Approx(st.k).epsilon(1e-12));
    // the ratio is computable from either side of the gluing
    const auto* ha = s.find(g.a.hexagon);
    const auto* hb = s.find(g.b.hexagon);
    double ka = std::acosh(2.0 * std::cosh(ha->shape.ell[g.a.edge])) /
                ha->shape.ell[g.a.edge];
    double kb = std::acosh(2.0 * std::cosh(hb->shape.ell[g.b.edge])) /
                hb->shape.ell[g.b.edge];
    CHECK(ka == doctest::Approx(ke).epsilon(1e-12));
    CHECK(kb == doctest::Approx(ke).epsilon(1e-12));
  }
  CHECK(surface_k(s, 1.0).k == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("arc certificate on the pants is geodesic with zero gap") {
  TriangulatedSurface s = pants({1.0, 1.0, 1.0});
  MetricCertificate cert = arc_certificate(s, 1.0, 2.0);
  CHECK(cert.lower_bound == doctest::Approx(0.58373878932118617).epsilon(1e-13));
  CHECK(cert.upper_bound == doctest::Approx(0.58373878932118617).epsilon(1e-13));
  CHECK(std::abs(cert.gap) <= 1e-10);
  CHECK(cert.geodesic_grade);

  // additivity of the lower bounds along the K-path
  TriangulatedSurface a = pants({0.8, 1.0, 1.2});
  MetricCertificate c13 = arc_certificate(a, 1.0, 3.0);
  MetricCertificate c12 = arc_certificate(a, 1.0, 2.0);
  MetricCertificate c23 = arc_certificate(a, 2.0, 3.0);
  CHECK(std::abs(c13.lower_bound - c12.lower_bound - c23.lower_bound) <= 1e-12);
  for (const auto& c : {c13, c12, c23}) CHECK(std::abs(c.gap) <= 1e-10);

  // trivial path
  MetricCertificate same = arc_certificate(s, 1.5, 1.5);
  CHECK(same.lower_bound == 0.0);
  CHECK(std::abs(same.upper_bound) < 1e-12);
  CHECK(same.geodesic_grade);

  CHECK_THROWS_AS(arc_certificate(s, 0.0, 2.0), DomainError);
  TriangulatedSurface lonely({{"front", hexagon_from_half_longs({1, 1, 1})}}, {}, true);
  CHECK_THROWS_AS(arc_certificate(lonely, 1.0, 2.0), DomainError);
}

TEST_CASE("torus certificate is geodesic too") {
  TriangulatedSurface s = one_holed_torus();
  for (auto [K1, K2] : {std::pair{1.0, 2.0}, {1.0, 3.0}, {2.0, 3.0}}) {
    MetricCertificate cert = arc_certificate(s, K1, K2);
    CHECK(std::abs(cert.gap) <= 1e-10);
    CHECK(cert.geodesic_grade);
  }
}

TEST_CASE("a free shortest edge opens a certificate gap") {
  // the strongest-stretching edge is unglued, so the arc bound cannot see it
  HexagonShape h = hexagon_from_half_longs({0.5, 1.0, 1.0});
  TriangulatedSurface s({{"front", h}, {"back", h}},
                        {{{"front", 1}, {"back", 1}, false},
                         {{"front", 2}, {"back", 2}, false}},
                        true);
  MetricCertificate cert = arc_certificate(s, 1.0, 2.0);
  CHECK(cert.gap > 1e-3);
  CHECK_FALSE(cert.geodesic_grade);
}

TEST_CASE("luo radius of glued edges") {
  TriangulatedSurface s = pants({1.0, 1.0, 1.0});
  const double L = 0.41356845081927851;
  for (int e = 0; e < 3; ++e) {
    CHECK(luo_radius(s, {"front", e}) == doctest::Approx(L).epsilon(1e-14));
    CHECK(luo_radius(s, {"back", e}) == doctest::Approx(L).epsilon(1e-14));
  }
  TriangulatedSurface open({{"front", hexagon_from_half_longs({1, 1, 1})},
                            {"back", hexagon_from_half_longs({1, 1, 1})}},
                           {{{"front", 0}, {"back", 0}, false}}, true);
  CHECK_THROWS_AS(luo_radius(open, {"front", 1}), DomainError);
  CHECK_THROWS_AS(luo_radius(open, {"ghost", 0}), DomainError);
  // positivity across a type-I-only surface
  TriangulatedSurface t = one_holed_torus();
  for (const auto& g : t.gluings()) CHECK(luo_radius(t, g.a) > 0.0);
}

TEST_CASE("corner-crossing cycles add up to half the boundary length") {
  for (TriangulatedSurface s : {pants({1.0, 1.0, 1.0}), pants({0.8, 1.0, 1.2})}) {
    BoundaryReport rep = boundary_cycles(s);
    for (const auto& cyc : rep.cycles) {
      EdgeCycle edges = corner_crossing_cycle(s, cyc);
      CHECK(edges.size() == cyc.steps.size());
      CHECK(2.0 * cycle_sum(s, edges) == doctest::Approx(cyc.length).epsilon(1e-10));
    }
  }
  CHECK(cycle_sum(pants({1.0, 1.0, 1.0}), {}) == 0.0);
}
