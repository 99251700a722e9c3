#pragma once

#include <memory>
#include <vector>

#include "cloak/parallel.hpp"
#include "cloak/types.hpp"

namespace cloak::fields {

// Anything with a complex value at a point: incident fields, device fields,
// layer potentials, scattered fields, sums thereof.
class Field {
 public:
  virtual ~Field() = default;
  virtual Complex value(Point2 x) const = 0;
};

// Fields with an analytic gradient. Green's formula needs n . grad u exactly;
// finite differencing inside the quadrature would wreck its spectral accuracy.
class IncidentField : public Field {
 public:
  virtual Grad2 gradient(Point2 x) const = 0;
};

// u(x) = exp(i k d.x), d = (cos angle, sin angle)
class PlaneWave final : public IncidentField {
 public:
  PlaneWave(const WaveContext& ctx, double angle);
  Complex value(Point2 x) const override;
  Grad2 gradient(Point2 x) const override;
  Point2 direction() const { return dir_; }

 private:
  double k_;
  Point2 dir_;
};

// u(x) = G(x, y0), radiating, singular at y0
class PointSource final : public IncidentField {
 public:
  PointSource(const WaveContext& ctx, Point2 location);
  Complex value(Point2 x) const override;
  Grad2 gradient(Point2 x) const override;
  Point2 location() const { return location_; }

 private:
  WaveContext ctx_;
  Point2 location_;
};

// pointwise weighted sum; weights may be complex
class Superposition final : public IncidentField {
 public:
  Superposition(std::vector<std::shared_ptr<const IncidentField>> fields,
                std::vector<Complex> weights);
  Complex value(Point2 x) const override;
  Grad2 gradient(Point2 x) const override;

 private:
  std::vector<std::shared_ptr<const IncidentField>> fields_;
  std::vector<Complex> weights_;
};

struct GridWindow {
  double x_min, x_max, y_min, y_max;
};

// Row-major raster of complex samples, y increasing upward: sample (ix, iy)
// sits at index iy*nx + ix.
struct FieldGrid {
  GridWindow window{};
  int nx = 0, ny = 0;
  std::vector<Complex> values;
  std::vector<unsigned char> singular;  // 1 where evaluation was singular

  Point2 point_at(int ix, int iy) const {
    return {window.x_min + (window.x_max - window.x_min) * ix / (nx - 1),
            window.y_min + (window.y_max - window.y_min) * iy / (ny - 1)};
  }
};

FieldGrid eval_grid(const Field& field, GridWindow window, int nx, int ny,
                    ExecMode mode = default_exec_mode());

}  // namespace cloak::fields
