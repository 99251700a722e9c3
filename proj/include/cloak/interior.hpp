#pragma once

#include <vector>

#include "cloak/fields.hpp"
#include "cloak/geometry.hpp"
#include "cloak/types.hpp"

namespace cloak::interior {

// Monopole and dipole densities of Green's formula sampled at the quadrature
// nodes of the boundary curve.
struct LayerDensities {
  const geometry::Curve* curve = nullptr;
  std::vector<Complex> monopole;  // -n(y) . grad u_i(y)
  std::vector<Complex> dipole;    // u_i(y)
};

LayerDensities build_densities(const fields::IncidentField& incident,
                               const geometry::Curve& boundary);

// Trapezoidal evaluation of the single + double layer representation. Tends
// to -u_i inside D and 0 outside as the node count grows; within two node
// spacings of the boundary plain quadrature degrades (see near_boundary).
class InteriorCloak final : public fields::Field {
 public:
  InteriorCloak(LayerDensities densities, WaveContext ctx);

  Complex value(Point2 x) const override;
  bool near_boundary(Point2 x) const;

  const LayerDensities& densities() const { return densities_; }

 private:
  LayerDensities densities_;
  WaveContext ctx_;
  double band_;
};

}  // namespace cloak::interior
