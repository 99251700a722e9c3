#include "cloak/metrics.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace cloak::metrics {

namespace {

// discrete L2 ratio ||f|| / ||g|| on the circle |x| = radius
double circle_norm_ratio(const std::function<Complex(Point2)>& f,
                         const std::function<Complex(Point2)>& g, double radius, int n_circ,
                         ExecMode mode) {
  std::vector<double> fn((size_t)n_circ), gn((size_t)n_circ);
  parallel_for(n_circ, mode, [&](std::int64_t i) {
    double theta = 2.0 * pi * (double)i / n_circ;
    Point2 p{radius * std::cos(theta), radius * std::sin(theta)};
    fn[(size_t)i] = std::norm(f(p));
    gn[(size_t)i] = std::norm(g(p));
  });
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n_circ; ++i) {
    num += fn[(size_t)i];
    den += gn[(size_t)i];
  }
  if (den == 0.0)
    throw numerical_error("circle_norm_ratio: reference field vanishes on the circle");
  return std::sqrt(num / den);
}

}  // namespace

double interior_error(const fields::IncidentField& incident,
                      const multipole::CloakSolution& solution, double delta, int n_circ,
                      ExecMode mode) {
  double radius = (1.0 - std::sqrt(3.0) / 2.0) * delta;
  return circle_norm_ratio(
      [&](Point2 p) { return incident.value(p) + multipole::eval_device_field(solution, p); },
      [&](Point2 p) { return incident.value(p); }, radius, n_circ, mode);
}

double radiation_error(const fields::IncidentField& incident,
                       const multipole::CloakSolution& solution, double delta, int n_circ,
                       ExecMode mode) {
  return circle_norm_ratio(
      [&](Point2 p) { return multipole::eval_device_field(solution, p); },
      [&](Point2 p) { return incident.value(p); }, 2.0 * delta, n_circ, mode);
}

namespace {

// |u_d| - beta, with non-finite field values (deep inside an urchin) counted
// as above the level
double level_gap(const multipole::CloakSolution& solution, Point2 p, double beta) {
  Complex v = multipole::eval_device_field(solution, p);
  double mag = std::abs(v);
  if (!std::isfinite(mag)) return 1.0;
  return mag - beta;
}

}  // namespace

double device_radius_estimate(const multipole::CloakSolution& solution, double beta) {
  if (!(beta > 0.0)) throw invalid_argument_error("device_radius_estimate: beta must be positive");
  if (solution.sources.size() != 3)
    throw invalid_argument_error("device_radius_estimate: needs a three-device layout");

  double lambda = solution.ctx.wavelength();
  double delta = solution.layout.delta;
  double step = lambda / 20.0;
  double tol = delta * 1e-6;

  double worst = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == j) continue;
      Point2 a = solution.sources[i].center;
      Point2 d = solution.sources[j].center - a;
      double half = 0.5 * d.norm();
      Point2 dir = d / d.norm();

      double s_lo = lambda / 50.0;
      double f_lo = level_gap(solution, a + s_lo * dir, beta);
      double crossing = -1.0;
      for (double s = s_lo + step; s <= half + step; s += step) {
        double s_hi = std::min(s, half);
        double f_hi = level_gap(solution, a + s_hi * dir, beta);
        if ((f_lo > 0.0) != (f_hi > 0.0)) {
          double lo = s_lo, hi = s_hi;
          while (hi - lo > tol) {
            double mid = 0.5 * (lo + hi);
            double fm = level_gap(solution, a + mid * dir, beta);
            if ((fm > 0.0) == (f_lo > 0.0))
              lo = mid;
            else
              hi = mid;
          }
          crossing = 0.5 * (lo + hi);
          break;
        }
        s_lo = s_hi;
        f_lo = f_hi;
        if (s_hi >= half) break;
      }
      if (crossing < 0.0)
        throw level_not_found_error("device_radius_estimate: no |u_d| = beta crossing on segment");
      worst = std::max(worst, crossing);
    }
  }
  return worst / delta;
}

}  // namespace cloak::metrics
