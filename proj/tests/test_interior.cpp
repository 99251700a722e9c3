#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "cloak/interior.hpp"
#include "oracles.hpp"

using namespace cloak;
using namespace cloak::fields;
using namespace cloak::geometry;
using namespace cloak::interior;

namespace {

struct ZeroField final : IncidentField {
  Complex value(Point2) const override { return {0.0, 0.0}; }
  Grad2 gradient(Point2) const override { return {}; }
};

InteriorCloak fig1_cloak(int n_nodes = 256) {
  WaveContext ctx(1.0);
  double sigma = 5.0 * ctx.wavelength();
  Curve boundary = circle_curve(sigma, {0.0, 0.0}, n_nodes);
  PlaneWave u(ctx, 5.0 * pi / 13.0);
  return InteriorCloak(build_densities(u, boundary), ctx);
}

}  // namespace

TEST_CASE("layer densities") {
  WaveContext ctx(1.0);
  Curve boundary = circle_curve(2.0, {0.0, 0.0}, 64);

  SUBCASE("zero incident field gives zero densities") {
    ZeroField zero;
    LayerDensities d = build_densities(zero, boundary);
    for (std::size_t i = 0; i < boundary.size(); ++i) {
      CHECK(d.monopole[i] == Complex{0.0, 0.0});
      CHECK(d.dipole[i] == Complex{0.0, 0.0});
    }
  }
  SUBCASE("plane wave dipole density has unit modulus") {
    PlaneWave u(ctx, 0.4);
    LayerDensities d = build_densities(u, boundary);
    for (const auto& v : d.dipole) CHECK(std::abs(v) == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("monopole density vanishes where the normal is orthogonal to the direction") {
    PlaneWave u(ctx, 0.0);  // propagation along +x
    LayerDensities d = build_densities(u, boundary);
    // nodes at t = pi/2 and 3pi/2 have normals (0, +-1), orthogonal to d
    CHECK(std::abs(d.monopole[16]) < 1e-14);
    CHECK(std::abs(d.monopole[48]) < 1e-14);
  }
}

TEST_CASE("interior cloak reproduces -u_i inside and 0 outside") {
  WaveContext ctx(1.0);
  double lambda = ctx.wavelength();
  InteriorCloak cloak = fig1_cloak();
  PlaneWave u(ctx, 5.0 * pi / 13.0);

  SUBCASE("at the origin") {
    Complex v = cloak.value({0.0, 0.0});
    CHECK(std::abs(v - Complex{-1.0, 0.0}) < 1e-6);
  }
  SUBCASE("outside the disk") {
    CHECK(std::abs(cloak.value({10.0 * lambda, 0.0})) < 1e-6);
  }
  SUBCASE("zero field in, zero field out") {
    ZeroField zero;
    Curve boundary = circle_curve(5.0 * lambda, {0.0, 0.0}, 256);
    InteriorCloak quiet(build_densities(zero, boundary), ctx);
    CHECK(quiet.value({1.0, 1.0}) == Complex{0.0, 0.0});
  }
}

TEST_CASE("near-boundary band is flagged") {
  InteriorCloak cloak = fig1_cloak();
  double sigma = 5.0 * 2.0 * pi;
  double spacing = cloak.densities().curve->node_spacing();
  CHECK(cloak.near_boundary({sigma - spacing, 0.0}));
  CHECK(cloak.near_boundary({sigma + spacing, 0.0}));
  CHECK_FALSE(cloak.near_boundary({sigma - 5.0 * spacing, 0.0}));
  CHECK_FALSE(cloak.near_boundary({0.0, 0.0}));
}

TEST_CASE("spectral convergence of the quadrature") {
  WaveContext ctx(1.0);
  double lambda = ctx.wavelength();
  PlaneWave u(ctx, 5.0 * pi / 13.0);

  std::vector<double> errs;
  for (int n : {64, 128, 256, 512}) {
    InteriorCloak cloak = fig1_cloak(n);
    double worst = 0.0;
    for (int i = 0; i < 64; ++i) {
      double t = 2.0 * pi * i / 64;
      Point2 p{2.5 * lambda * std::cos(t), 2.5 * lambda * std::sin(t)};
      worst = std::max(worst, std::abs(cloak.value(p) + u.value(p)));
    }
    errs.push_back(worst);
  }
  // the floor is reached by N = 512
  CHECK(errs.back() < 1e-10);
  // decay is superalgebraic: successive ratios improve until the floor
  for (std::size_t i = 1; i < errs.size(); ++i)
    if (errs[i] > 1e-12) CHECK(errs[i] < errs[i - 1]);
  if (errs[1] > 1e-12 && errs[2] > 1e-12) CHECK(errs[2] / errs[1] < errs[1] / errs[0]);
}

TEST_CASE("jump relation across the boundary") {
  WaveContext ctx(1.0);
  InteriorCloak cloak = fig1_cloak();
  PlaneWave u(ctx, 5.0 * pi / 13.0);
  const Curve& boundary = *cloak.densities().curve;
  double h = 5.0 * boundary.node_spacing();

  for (std::size_t i = 0; i < boundary.size(); i += 37) {
    const auto& node = boundary.nodes()[i];
    Point2 outside = node.position + h * node.normal;
    Point2 inside = node.position - h * node.normal;
    // u_d jumps from -u_i (inside) to 0 (outside)
    Complex jump = cloak.value(outside) - cloak.value(inside);
    CHECK(std::abs(jump - u.value(node.position)) < 0.1 * std::abs(u.value(node.position)));
  }
}

TEST_CASE("cloak field satisfies helmholtz away from the boundary") {
  WaveContext ctx(1.0);
  double lambda = ctx.wavelength();
  InteriorCloak cloak = fig1_cloak();
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> radius_in(0.5 * lambda, 3.5 * lambda);
  std::uniform_real_distribution<double> radius_out(6.5 * lambda, 9.0 * lambda);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi);
  for (int i = 0; i < 12; ++i) {
    double r = i % 2 == 0 ? radius_in(rng) : radius_out(rng);
    double t = angle(rng);
    Point2 x{r * std::cos(t), r * std::sin(t)};
    double res = oracles::helmholtz_residual([&](Point2 p) { return cloak.value(p); }, x, ctx.k,
                                             lambda / 200.0);
    CHECK(res < 1e-4);
  }
}

TEST_CASE("radiating tail is tiny far away") {
  InteriorCloak cloak = fig1_cloak();
  double lambda = 2.0 * pi;
  for (int i = 0; i < 16; ++i) {
    double t = 2.0 * pi * i / 16;
    CHECK(std::abs(cloak.value({20.0 * lambda * std::cos(t), 20.0 * lambda * std::sin(t)})) <
          1e-4);
  }
}
