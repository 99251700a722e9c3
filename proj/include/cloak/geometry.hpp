#pragma once

#include <functional>
#include <vector>

#include "cloak/types.hpp"

namespace cloak::geometry {

struct CurveNode {
  Point2 position;
  Point2 normal;   // unit outward normal
  double weight;   // arclength quadrature weight |p'(t)| * 2*pi/N
  double param;    // parameter t in [0, 2*pi)
};

// Closed regular parametrized curve sampled at N equispaced parameter values.
// Trapezoidal quadrature on these nodes is spectrally accurate for smooth
// periodic integrands. The analytic parametrization is kept so callers can
// resample the boundary at other counts.
class Curve {
 public:
  using Parametrization = std::function<Point2(double)>;

  // p(t) and its exact derivative dp(t); equispaced nodes in t
  Curve(Parametrization p, Parametrization dp, int n_nodes);

  const std::vector<CurveNode>& nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }
  Point2 centroid() const { return centroid_; }
  Point2 point_at(double t) const { return param_(t); }

  double perimeter() const;
  double node_spacing() const { return perimeter() / (double)size(); }
  double distance_to(Point2 x) const;  // min over nodes
  bool contains(Point2 x) const;       // even-odd test on the node polygon

 private:
  Parametrization param_;
  std::vector<CurveNode> nodes_;
  Point2 centroid_;
};

Curve circle_curve(double radius, Point2 center, int n_nodes);

// p(t) = scale*(cos t + 0.65 cos 2t - 0.65, 1.5 sin t) + center
Curve kite_curve(double scale, Point2 center, int n_nodes);

struct Arc {
  double t_begin;  // parameter interval [t_begin, t_end), possibly wrapping
  double t_end;
};

struct DeviceLayout {
  std::vector<Point2> positions;
  std::vector<Arc> arcs;               // one per device, partition of [0, 2pi)
  std::vector<double> reach;           // sup over arc of |y - x_j|
  std::vector<int> node_device;        // owning device index per curve node
  double delta = 0.0;                  // device distance from origin
  double sigma = 0.0;                  // radius of the boundary circle

  int n_dev() const { return (int)positions.size(); }
};

struct CloakGeometry {
  double delta;
  double sigma;
  double shadow_radius;             // r(sigma, delta)
  double effective_radius;          // r_eff = delta - r(sigma, delta)
  double optimal_effective_radius;  // (1 - sqrt(3)/2) delta
};

// r(sigma, delta) = ((sigma - delta/2)^2 + 3 delta^2/4)^{1/2}
double shadow_radius(double sigma, double delta);
// r_eff = delta - r(sigma, delta); may be <= 0
double effective_radius(double sigma, double delta);
// r_eff at sigma = delta/2, the maximizer: (1 - sqrt(3)/2) delta
double optimal_effective_radius(double delta);

// n_dev devices on the circle |x| = delta starting at angle pi/2, the circle
// |x| = sigma split into n_dev equal arcs each centered on its device
// direction. The curve must be a circle of radius sigma about the origin.
DeviceLayout ring_layout(int n_dev, double delta, double sigma, const Curve& boundary);

std::pair<DeviceLayout, CloakGeometry> equilateral_layout(double delta, double sigma,
                                                          const Curve& boundary);

// x strictly outside every exclusion disk B_j
bool in_region_R(Point2 x, const DeviceLayout& layout);

// Samples the interior of D on a grid and reports whether any sample lies in
// R, i.e. whether the effective cloaked region D cap R is non-empty.
bool min_device_check(const DeviceLayout& layout, const Curve& boundary,
                      int grid_resolution = 512);

}  // namespace cloak::geometry
