#include "cloak/fields.hpp"

#include <cmath>

#include "cloak/specfun.hpp"

namespace cloak::fields {

PlaneWave::PlaneWave(const WaveContext& ctx, double angle)
    : k_(ctx.k), dir_{std::cos(angle), std::sin(angle)} {}

Complex PlaneWave::value(Point2 x) const { return std::exp(iu * k_ * dot(dir_, x)); }

Grad2 PlaneWave::gradient(Point2 x) const {
  Complex u = value(x);
  return {iu * k_ * dir_.x * u, iu * k_ * dir_.y * u};
}

PointSource::PointSource(const WaveContext& ctx, Point2 location)
    : ctx_(ctx), location_(location) {}

Complex PointSource::value(Point2 x) const { return specfun::greens(ctx_, x, location_); }

Grad2 PointSource::gradient(Point2 x) const {
  // gradient in the first argument; G depends on |x - y0| only
  Grad2 gy = specfun::greens_grad_y(ctx_, location_, x);
  return gy;
}

Superposition::Superposition(std::vector<std::shared_ptr<const IncidentField>> fields,
                             std::vector<Complex> weights)
    : fields_(std::move(fields)), weights_(std::move(weights)) {
  if (fields_.size() != weights_.size())
    throw invalid_argument_error("superpose: fields and weights differ in length");
}

Complex Superposition::value(Point2 x) const {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < fields_.size(); ++i) s += weights_[i] * fields_[i]->value(x);
  return s;
}

Grad2 Superposition::gradient(Point2 x) const {
  Grad2 g;
  for (std::size_t i = 0; i < fields_.size(); ++i) g = g + weights_[i] * fields_[i]->gradient(x);
  return g;
}

FieldGrid eval_grid(const Field& field, GridWindow window, int nx, int ny, ExecMode mode) {
  if (nx < 2 || ny < 2) throw invalid_argument_error("eval_grid: resolution must be at least 2x2");
  FieldGrid grid;
  grid.window = window;
  grid.nx = nx;
  grid.ny = ny;
  grid.values.assign((size_t)nx * (size_t)ny, Complex{0.0, 0.0});
  grid.singular.assign((size_t)nx * (size_t)ny, 0);

  parallel_for((std::int64_t)nx * ny, mode, [&](std::int64_t idx) {
    int ix = (int)(idx % nx), iy = (int)(idx / nx);
    Point2 p = grid.point_at(ix, iy);
    Complex v;
    bool bad = false;
    try {
      v = field.value(p);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) bad = true;
    } catch (const singularity_error&) {
      bad = true;
    }
    if (bad) {
      grid.singular[(size_t)idx] = 1;
      grid.values[(size_t)idx] = Complex{std::nan(""), std::nan("")};
    } else {
      grid.values[(size_t)idx] = v;
    }
  });
  return grid;
}

}  // namespace cloak::fields
