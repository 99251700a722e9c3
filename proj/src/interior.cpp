#include "cloak/interior.hpp"

#include "cloak/specfun.hpp"

namespace cloak::interior {

LayerDensities build_densities(const fields::IncidentField& incident,
                               const geometry::Curve& boundary) {
  LayerDensities d;
  d.curve = &boundary;
  d.monopole.reserve(boundary.size());
  d.dipole.reserve(boundary.size());
  for (const auto& node : boundary.nodes()) {
    Grad2 g = incident.gradient(node.position);
    d.monopole.push_back(-dot(node.normal, g));
    d.dipole.push_back(incident.value(node.position));
  }
  return d;
}

InteriorCloak::InteriorCloak(LayerDensities densities, WaveContext ctx)
    : densities_(std::move(densities)), ctx_(ctx) {
  band_ = 2.0 * densities_.curve->node_spacing();
}

Complex InteriorCloak::value(Point2 x) const {
  const auto& nodes = densities_.curve->nodes();
  Complex sum{0.0, 0.0};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& node = nodes[i];
    Complex g = specfun::greens(ctx_, x, node.position);
    Complex dgdn = dot(node.normal, specfun::greens_grad_y(ctx_, x, node.position));
    sum += node.weight * (densities_.monopole[i] * g + densities_.dipole[i] * dgdn);
  }
  return sum;
}

bool InteriorCloak::near_boundary(Point2 x) const {
  return densities_.curve->distance_to(x) < band_;
}

}  // namespace cloak::interior
