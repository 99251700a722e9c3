#include <doctest.h>

#include <cmath>

#include "cloak/geometry.hpp"

using namespace cloak;
using namespace cloak::geometry;

TEST_CASE("circle curve nodes, normals and weights") {
  double lambda = 2.0 * pi;  // k = 1
  double radius = 5.0 * lambda;
  Curve c = circle_curve(radius, {0.0, 0.0}, 256);

  SUBCASE("perimeter from quadrature weights") {
    CHECK(c.perimeter() == doctest::Approx(2.0 * pi * radius).epsilon(1e-12));
  }
  SUBCASE("normals are unit and radial") {
    for (const auto& n : c.nodes()) {
      CHECK(n.normal.norm() == doctest::Approx(1.0).epsilon(1e-14));
      Point2 radial = (n.position - Point2{0.0, 0.0}) / radius;
      CHECK(std::fabs(n.normal.x - radial.x) < 1e-14);
      CHECK(std::fabs(n.normal.y - radial.y) < 1e-14);
    }
  }
  SUBCASE("trapezoid rule integrates circular harmonics to spectral accuracy") {
    for (int nu : {1, 2, 17, 100, 127}) {
      Complex s{0.0, 0.0};
      for (const auto& n : c.nodes()) s += n.weight * std::exp(iu * (double)nu * n.param);
      CHECK(std::abs(s) < 1e-12 * c.perimeter());
    }
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS((void)circle_curve(-1.0, {0, 0}, 64), invalid_argument_error);
    CHECK_THROWS_AS((void)circle_curve(1.0, {0, 0}, 4), invalid_argument_error);
  }
}

TEST_CASE("kite curve") {
  SUBCASE("perimeter self-convergence") {
    double p128 = kite_curve(1.0, {0, 0}, 128).perimeter();
    double p256 = kite_curve(1.0, {0, 0}, 256).perimeter();
    double p512 = kite_curve(1.0, {0, 0}, 512).perimeter();
    CHECK(std::fabs(p256 - p128) / p256 < 1e-10);
    CHECK(std::fabs(p512 - p256) / p512 < 1e-12);
  }
  SUBCASE("scaling and translation") {
    Curve base = kite_curve(1.0, {0, 0}, 256);
    Curve scaled = kite_curve(3.0, {2.0, -1.0}, 256);
    for (std::size_t i = 0; i < base.size(); ++i) {
      Point2 expect = 3.0 * base.nodes()[i].position + Point2{2.0, -1.0};
      CHECK(std::fabs(scaled.nodes()[i].position.x - expect.x) < 1e-12);
      CHECK(std::fabs(scaled.nodes()[i].position.y - expect.y) < 1e-12);
    }
    Point2 centroid_shift = scaled.centroid() - 3.0 * base.centroid();
    CHECK(centroid_shift.x == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(centroid_shift.y == doctest::Approx(-1.0).epsilon(1e-12));
  }
  SUBCASE("outward normals for a star-shaped curve") {
    Curve c = kite_curve(1.0, {0, 0}, 512);
    for (const auto& n : c.nodes())
      CHECK(dot(n.normal, n.position - c.centroid()) > 0.0);
  }
  SUBCASE("bounding box scales with the parametrization") {
    Curve c = kite_curve(2.0, {0, 0}, 256);
    for (const auto& n : c.nodes()) {
      CHECK(n.position.x <= 2.0 * 1.0 + 1e-12);   // max of cos t + 0.65 cos 2t - 0.65 is 1
      CHECK(std::fabs(n.position.y) <= 2.0 * 1.5 + 1e-12);
    }
  }
}

TEST_CASE("closed-form cloak geometry") {
  SUBCASE("shadow radius") {
    CHECK(shadow_radius(0.5, 1.0) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(shadow_radius(1.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(shadow_radius(1e-12, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
  SUBCASE("effective radius and its optimum") {
    CHECK(optimal_effective_radius(1.0) ==
          doctest::Approx(1.0 - std::sqrt(3.0) / 2.0).epsilon(1e-14));
    CHECK(effective_radius(0.5, 1.0) == doctest::Approx(optimal_effective_radius(1.0)).epsilon(1e-14));
    CHECK(effective_radius(1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
  }
  SUBCASE("r_eff is maximized at sigma = delta/2") {
    double best = -1e300;
    double best_sigma = 0.0;
    for (int i = 1; i <= 200; ++i) {
      double sigma = i / 200.0;
      double r = effective_radius(sigma, 1.0);
      if (r > best) {
        best = r;
        best_sigma = sigma;
      }
    }
    CHECK(best_sigma == doctest::Approx(0.5).epsilon(0.01));
  }
}

TEST_CASE("equilateral layout") {
  double delta = 10.0, sigma = 5.0;
  Curve boundary = circle_curve(sigma, {0, 0}, 384);
  auto [layout, geom] = equilateral_layout(delta, sigma, boundary);

  SUBCASE("reaches are equal and match the closed form") {
    CHECK(layout.reach[0] == doctest::Approx(layout.reach[1]).epsilon(1e-12));
    CHECK(layout.reach[1] == doctest::Approx(layout.reach[2]).epsilon(1e-12));
    CHECK(layout.reach[0] ==
          doctest::Approx(std::sqrt(3.0) / 2.0 * delta).epsilon(1e-12));  // sigma = delta/2
    CHECK(geom.shadow_radius == doctest::Approx(layout.reach[0]).epsilon(1e-12));
  }
  SUBCASE("first device sits on the positive y-axis") {
    CHECK(layout.positions[0].x == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(layout.positions[0].y == doctest::Approx(delta).epsilon(1e-12));
  }
  SUBCASE("arcs partition the nodes into equal thirds") {
    int counts[3] = {0, 0, 0};
    for (int d : layout.node_device) counts[d]++;
    CHECK(counts[0] == 128);
    CHECK(counts[1] == 128);
    CHECK(counts[2] == 128);
  }
  SUBCASE("a rotation by 2pi/3 permutes the arcs cyclically") {
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      std::size_t shifted = (i + boundary.size() / 3) % boundary.size();
      CHECK(layout.node_device[shifted] == (layout.node_device[i] + 1) % 3);
    }
  }
  SUBCASE("boundary nodes are covered by the exclusion disks") {
    for (const auto& n : boundary.nodes()) {
      bool covered = false;
      for (int j = 0; j < 3; ++j)
        if ((n.position - layout.positions[(size_t)j]).norm() <= layout.reach[(size_t)j] + 1e-12)
          covered = true;
      CHECK(covered);
    }
  }
  SUBCASE("devices on the boundary are rejected") {
    CHECK_THROWS_AS((void)ring_layout(3, sigma, sigma, boundary), invalid_argument_error);
  }
}

TEST_CASE("adjacent exclusion disks touch in one point at sigma = delta/2") {
  double delta = 2.0;
  Curve boundary = circle_curve(delta / 2.0, {0, 0}, 384);
  auto [layout, geom] = equilateral_layout(delta, delta / 2.0, boundary);
  double reach = layout.reach[0];

  // minimum over the circle |p - x_1| = reach of the distance defect to disk 0
  double min_defect = 1e300;
  for (int i = 0; i < 200000; ++i) {
    double t = 2.0 * pi * i / 200000;
    Point2 p = layout.positions[1] + reach * Point2{std::cos(t), std::sin(t)};
    min_defect = std::min(min_defect, std::fabs((p - layout.positions[0]).norm() - reach));
  }
  CHECK(min_defect < 1e-9 * delta);
}

TEST_CASE("region R membership") {
  double delta = 1.0;
  Curve boundary = circle_curve(0.5, {0, 0}, 384);
  auto [layout, geom] = equilateral_layout(delta, 0.5, boundary);

  CHECK(in_region_R({0.0, 0.0}, layout));
  for (const auto& p : layout.positions) CHECK_FALSE(in_region_R(p, layout));
  CHECK(in_region_R({2.0 * delta, 0.0}, layout));
  CHECK(in_region_R({0.0, -2.0 * delta}, layout));
}

TEST_CASE("minimum device count for a non-empty effective region") {
  double delta = 1.0, sigma = 0.5;
  Curve boundary = circle_curve(sigma, {0, 0}, 384);

  CHECK_FALSE(min_device_check(ring_layout(1, delta, sigma, boundary), boundary, 256));
  CHECK_FALSE(min_device_check(ring_layout(2, delta, sigma, boundary), boundary, 256));
  CHECK(min_device_check(ring_layout(3, delta, sigma, boundary), boundary, 256));
}
