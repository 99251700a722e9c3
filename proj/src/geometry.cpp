#include "cloak/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "cloak/parallel.hpp"

namespace cloak::geometry {

Curve::Curve(Parametrization p, Parametrization dp, int n_nodes) : param_(std::move(p)) {
  nodes_.resize((size_t)n_nodes);
  centroid_ = {0.0, 0.0};
  for (int i = 0; i < n_nodes; ++i) {
    double t = 2.0 * pi * i / n_nodes;
    Point2 pos = param_(t);
    Point2 d = dp(t);
    double speed = d.norm();
    if (!(speed > 0.0)) throw invalid_argument_error("Curve: parametrization must be regular");
    // counterclockwise parametrization: outward normal is (p'_y, -p'_x)/|p'|
    nodes_[(size_t)i] = {pos, {d.y / speed, -d.x / speed}, speed * 2.0 * pi / n_nodes, t};
    centroid_ = centroid_ + pos;
  }
  centroid_ = centroid_ / (double)n_nodes;
}

double Curve::perimeter() const {
  double s = 0.0;
  for (const auto& n : nodes_) s += n.weight;
  return s;
}

double Curve::distance_to(Point2 x) const {
  double d = std::numeric_limits<double>::infinity();
  for (const auto& n : nodes_) d = std::min(d, (x - n.position).norm());
  return d;
}

bool Curve::contains(Point2 x) const {
  bool inside = false;
  std::size_t n = nodes_.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    Point2 pi = nodes_[i].position, pj = nodes_[j].position;
    if ((pi.y > x.y) != (pj.y > x.y) &&
        x.x < (pj.x - pi.x) * (x.y - pi.y) / (pj.y - pi.y) + pi.x)
      inside = !inside;
  }
  return inside;
}

Curve circle_curve(double radius, Point2 center, int n_nodes) {
  if (!(radius > 0.0)) throw invalid_argument_error("circle_curve: radius must be positive");
  if (n_nodes < 8) throw invalid_argument_error("circle_curve: need at least 8 nodes");
  return Curve(
      [=](double t) -> Point2 {
        return center + radius * Point2{std::cos(t), std::sin(t)};
      },
      [=](double t) -> Point2 {
        return radius * Point2{-std::sin(t), std::cos(t)};
      },
      n_nodes);
}

Curve kite_curve(double scale, Point2 center, int n_nodes) {
  if (!(scale > 0.0)) throw invalid_argument_error("kite_curve: scale must be positive");
  if (n_nodes < 32) throw invalid_argument_error("kite_curve: need at least 32 nodes");
  return Curve(
      [=](double t) -> Point2 {
        return center +
               scale * Point2{std::cos(t) + 0.65 * std::cos(2 * t) - 0.65, 1.5 * std::sin(t)};
      },
      [=](double t) -> Point2 {
        return scale * Point2{-std::sin(t) - 1.3 * std::sin(2 * t), 1.5 * std::cos(t)};
      },
      n_nodes);
}

double shadow_radius(double sigma, double delta) {
  if (!(sigma > 0.0) || !(delta > 0.0))
    throw invalid_argument_error("shadow_radius: sigma and delta must be positive");
  double a = sigma - delta / 2.0;
  return std::sqrt(a * a + 0.75 * delta * delta);
}

double effective_radius(double sigma, double delta) {
  return delta - shadow_radius(sigma, delta);
}

double optimal_effective_radius(double delta) {
  if (!(delta > 0.0)) throw invalid_argument_error("optimal_effective_radius: delta must be positive");
  return (1.0 - std::sqrt(3.0) / 2.0) * delta;
}

DeviceLayout ring_layout(int n_dev, double delta, double sigma, const Curve& boundary) {
  if (n_dev < 1) throw invalid_argument_error("ring_layout: need at least one device");
  if (!(delta > 0.0) || !(sigma > 0.0))
    throw invalid_argument_error("ring_layout: delta and sigma must be positive");
  if (delta == sigma)
    throw invalid_argument_error("ring_layout: devices would lie on the boundary");

  DeviceLayout layout;
  layout.delta = delta;
  layout.sigma = sigma;
  double half_arc = pi / n_dev;
  for (int j = 0; j < n_dev; ++j) {
    double theta = pi / 2.0 + 2.0 * pi * j / n_dev;
    layout.positions.push_back({delta * std::cos(theta), delta * std::sin(theta)});
    layout.arcs.push_back({theta - half_arc, theta + half_arc});
    // farthest boundary point of the arc sits at the arc endpoints
    layout.reach.push_back(
        std::sqrt(sigma * sigma + delta * delta - 2.0 * sigma * delta * std::cos(half_arc)));
  }

  // Half-open arc convention [theta_j - pi/n, theta_j + pi/n): a node exactly
  // on a shared endpoint belongs to the arc starting there. The small bias
  // keeps the floor stable against rounding in the node parameters.
  layout.node_device.resize(boundary.size());
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    double frac = boundary.nodes()[i].param / (2.0 * pi);
    double pos = (frac - 0.25 + 0.5 / n_dev) * n_dev + 1e-9;
    int j = (int)std::floor(pos) % n_dev;
    if (j < 0) j += n_dev;
    layout.node_device[i] = j;
  }
  return layout;
}

std::pair<DeviceLayout, CloakGeometry> equilateral_layout(double delta, double sigma,
                                                          const Curve& boundary) {
  DeviceLayout layout = ring_layout(3, delta, sigma, boundary);
  CloakGeometry geom{delta, sigma, shadow_radius(sigma, delta), effective_radius(sigma, delta),
                     optimal_effective_radius(delta)};
  return {std::move(layout), geom};
}

bool in_region_R(Point2 x, const DeviceLayout& layout) {
  for (int j = 0; j < layout.n_dev(); ++j)
    if ((x - layout.positions[(size_t)j]).norm() <= layout.reach[(size_t)j]) return false;
  return true;
}

bool min_device_check(const DeviceLayout& layout, const Curve& boundary, int grid_resolution) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& n : boundary.nodes()) {
    xmin = std::min(xmin, n.position.x);
    xmax = std::max(xmax, n.position.x);
    ymin = std::min(ymin, n.position.y);
    ymax = std::max(ymax, n.position.y);
  }

  int g = grid_resolution;
  std::vector<unsigned char> hit((size_t)g * (size_t)g, 0);
  parallel_for((std::int64_t)g * g, default_exec_mode(), [&](std::int64_t idx) {
    int i = (int)(idx % g), j = (int)(idx / g);
    Point2 p{xmin + (xmax - xmin) * (i + 0.5) / g, ymin + (ymax - ymin) * (j + 0.5) / g};
    if (boundary.contains(p) && in_region_R(p, layout)) hit[(size_t)idx] = 1;
  });
  return std::find(hit.begin(), hit.end(), 1) != hit.end();
}

}  // namespace cloak::geometry
