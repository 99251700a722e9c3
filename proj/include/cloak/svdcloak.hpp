#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cloak/fields.hpp"
#include "cloak/geometry.hpp"
#include "cloak/multipole.hpp"
#include "cloak/types.hpp"

namespace cloak::svdcloak {

// Stacked weighted least-squares system: device basis functions V_m(. - x_j)
// sampled on the alpha circle (target -u_i) and the gamma circle (target 0,
// rows scaled by weight_ratio).
struct LeastSquaresSystem {
  Eigen::MatrixXcd matrix;  // rows already scaled by row_weights
  Eigen::VectorXcd rhs;
  Eigen::VectorXd row_weights;
  geometry::DeviceLayout layout;
  WaveContext ctx{1.0};
  int M = 0;
  int n_alpha = 0;
  int n_gamma = 0;

  int col(int device, int m) const { return device * (2 * M + 1) + (m + M); }
};

LeastSquaresSystem build_system(const fields::IncidentField& incident,
                                const geometry::DeviceLayout& layout, const WaveContext& ctx,
                                double alpha, double gamma, int M, int n_alpha, int n_gamma,
                                double weight_ratio = 1.0,
                                ExecMode mode = default_exec_mode());

struct SvdSolveResult {
  multipole::CloakSolution solution;
  double residual = 0.0;  // ||W (A x - b)||_2, reported by re-multiplication
  int rank = 0;
  std::vector<double> singular_values;
};

// Minimum-norm least squares with singular values <= rel_cutoff * sigma_max
// treated as zero.
SvdSolveResult svd_solve(const LeastSquaresSystem& system, double rel_cutoff = 1e-12);

// The underlying truncated-SVD solve, shared with the scattering solver.
Eigen::VectorXcd lstsq_svd(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b,
                           double rel_cutoff, int* rank_out = nullptr,
                           std::vector<double>* singular_values_out = nullptr);

}  // namespace cloak::svdcloak
