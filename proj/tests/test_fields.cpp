#include <doctest.h>

#include <cmath>
#include <memory>
#include <random>

#include "cloak/fields.hpp"
#include "oracles.hpp"

using namespace cloak;
using namespace cloak::fields;

TEST_CASE("plane wave basics") {
  WaveContext ctx(1.0);
  PlaneWave u(ctx, 5.0 * pi / 13.0);

  CHECK(u.value({0.0, 0.0}) == Complex{1.0, 0.0});
  for (Point2 x : {Point2{3.0, -2.0}, Point2{-15.0, 40.0}})
    CHECK(std::abs(u.value(x)) == doctest::Approx(1.0).epsilon(1e-14));

  SUBCASE("gradient matches finite differences") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> coord(-20.0, 20.0);
    for (int i = 0; i < 100; ++i) {
      Point2 x{coord(rng), coord(rng)};
      Grad2 g = u.gradient(x);
      Grad2 fd = oracles::fd_gradient([&](Point2 p) { return u.value(p); }, x, 1e-6);
      CHECK(std::abs(g.x - fd.x) <= 1e-7 * ctx.k);
      CHECK(std::abs(g.y - fd.y) <= 1e-7 * ctx.k);
    }
  }
}

TEST_CASE("point source") {
  WaveContext ctx(1.0);
  double lambda = ctx.wavelength();
  Point2 y0{1.0, -2.0};
  PointSource u(ctx, y0);

  SUBCASE("symmetric in source and observation point") {
    PointSource swapped(ctx, {4.0, 3.0});
    CHECK(u.value({4.0, 3.0}) == swapped.value(y0));
  }
  SUBCASE("helmholtz residual away from the source") {
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> coord(-30.0, 30.0);
    int tested = 0;
    while (tested < 50) {
      Point2 x{coord(rng), coord(rng)};
      if ((x - y0).norm() < lambda) continue;
      double res = oracles::helmholtz_residual([&](Point2 p) { return u.value(p); }, x, ctx.k,
                                               lambda / 200.0);
      CHECK(res < 1e-4);
      ++tested;
    }
  }
  SUBCASE("far-field decay like 1/sqrt(r)") {
    double m10 = std::abs(u.value(y0 + Point2{10.0 * lambda, 0.0}));
    double m40 = std::abs(u.value(y0 + Point2{40.0 * lambda, 0.0}));
    CHECK(m10 / m40 == doctest::Approx(2.0).epsilon(0.05));
  }
  SUBCASE("gradient matches finite differences") {
    Point2 x{5.0, 4.0};
    Grad2 g = u.gradient(x);
    Grad2 fd = oracles::fd_gradient([&](Point2 p) { return u.value(p); }, x, 1e-6);
    double scale = std::max(std::abs(g.x), std::abs(g.y));
    CHECK(std::abs(g.x - fd.x) <= 1e-6 * scale);
    CHECK(std::abs(g.y - fd.y) <= 1e-6 * scale);
  }
}

TEST_CASE("superposition") {
  WaveContext ctx(2.0);
  auto f = std::make_shared<PlaneWave>(ctx, 0.3);
  auto g = std::make_shared<PointSource>(ctx, Point2{0.0, 0.0});

  SUBCASE("identity weight") {
    Superposition s({f}, {Complex{1.0, 0.0}});
    Point2 x{1.0, 2.0};
    CHECK(s.value(x) == f->value(x));
  }
  SUBCASE("cancellation") {
    Superposition s({f, f}, {Complex{1.0, 0.0}, Complex{-1.0, 0.0}});
    CHECK(std::abs(s.value({0.7, -0.9})) == 0.0);
  }
  SUBCASE("length mismatch") {
    CHECK_THROWS_AS(Superposition({f, g}, {Complex{1.0, 0.0}}), invalid_argument_error);
  }
  SUBCASE("helmholtz residual of a mixture") {
    Superposition s({f, g}, {Complex{0.5, 0.1}, Complex{0.0, 2.0}});
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> coord(2.0, 20.0);
    for (int i = 0; i < 40; ++i) {
      Point2 x{coord(rng), coord(rng)};
      double res = oracles::helmholtz_residual([&](Point2 p) { return s.value(p); }, x, ctx.k,
                                               ctx.wavelength() / 200.0);
      CHECK(res < 1e-4);
    }
  }
}

TEST_CASE("grid evaluation") {
  WaveContext ctx(1.0);
  PlaneWave u(ctx, 0.25);
  GridWindow window{-3.0, 3.0, -2.0, 2.0};

  SUBCASE("pointwise sampling at matching resolutions") {
    FieldGrid coarse = eval_grid(u, window, 5, 5);
    FieldGrid fine = eval_grid(u, window, 9, 9);
    for (int iy = 0; iy < 5; ++iy)
      for (int ix = 0; ix < 5; ++ix)
        CHECK(coarse.values[(size_t)iy * 5 + ix] ==
              fine.values[(size_t)(2 * iy) * 9 + 2 * ix]);
  }
  SUBCASE("zero field gives a zero grid") {
    struct Zero final : Field {
      Complex value(Point2) const override { return {0.0, 0.0}; }
    } zero;
    FieldGrid g = eval_grid(zero, window, 8, 8);
    for (const auto& v : g.values) CHECK(v == Complex{0.0, 0.0});
  }
  SUBCASE("singular pixels are flagged without poisoning neighbors") {
    PointSource s(ctx, {0.0, 0.0});
    FieldGrid g = eval_grid(s, {-1.0, 1.0, -1.0, 1.0}, 3, 3);
    CHECK(g.singular[4] == 1);  // center pixel exactly on the source
    int flagged = 0;
    for (std::size_t i = 0; i < g.values.size(); ++i) {
      if (g.singular[i]) {
        ++flagged;
        continue;
      }
      CHECK(std::isfinite(g.values[i].real()));
      CHECK(std::isfinite(g.values[i].imag()));
    }
    CHECK(flagged == 1);
  }
  SUBCASE("resolution must be at least 2x2") {
    CHECK_THROWS_AS((void)eval_grid(u, window, 1, 8), invalid_argument_error);
  }
}

TEST_CASE("incident fields satisfy the helmholtz equation") {
  WaveContext ctx(1.0);
  double h = ctx.wavelength() / 200.0;
  PlaneWave pw(ctx, 1.1);
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> coord(-25.0, 25.0);
  for (int i = 0; i < 100; ++i) {
    Point2 x{coord(rng), coord(rng)};
    CHECK(oracles::helmholtz_residual([&](Point2 p) { return pw.value(p); }, x, ctx.k, h) <
          1e-4);
  }
}
