#pragma once

#include <optional>
#include <string>

#include "cloak/fields.hpp"
#include "cloak/multipole.hpp"
#include "cloak/types.hpp"

namespace cloak::metrics {

struct CloakReport {
  double delta = 0.0;
  double sigma = 0.0;
  int M = 0;
  std::string method;
  double interior_error = 0.0;
  double radiation_error = 0.0;
  std::optional<double> beta;
  std::optional<double> device_radius_over_delta;
};

// ||u_i + u_d|| / ||u_i||, discrete L2 on the circle |x| = (1 - sqrt(3)/2) delta
double interior_error(const fields::IncidentField& incident,
                      const multipole::CloakSolution& solution, double delta, int n_circ = 256,
                      ExecMode mode = default_exec_mode());

// ||u_d|| / ||u_i||, discrete L2 on the circle |x| = 2 delta
double radiation_error(const fields::IncidentField& incident,
                       const multipole::CloakSolution& solution, double delta, int n_circ = 256,
                       ExecMode mode = default_exec_mode());

// Extended-device radius estimate: along each segment from a device center
// toward another device, march at lambda/20 and bisect for the first crossing
// of |u_d| = beta; returns the maximum crossing distance over all six
// half-segments, divided by delta. Throws level_not_found_error when a
// half-segment has no crossing.
double device_radius_estimate(const multipole::CloakSolution& solution, double beta);

}  // namespace cloak::metrics
