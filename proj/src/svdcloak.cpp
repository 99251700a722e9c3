#include "cloak/svdcloak.hpp"

#include <cmath>
#include <complex>

#include <lapacke.h>

#include "cloak/specfun.hpp"

namespace cloak::svdcloak {

LeastSquaresSystem build_system(const fields::IncidentField& incident,
                                const geometry::DeviceLayout& layout, const WaveContext& ctx,
                                double alpha, double gamma, int M, int n_alpha, int n_gamma,
                                double weight_ratio, ExecMode mode) {
  double min_dev = std::numeric_limits<double>::infinity();
  for (const auto& p : layout.positions) min_dev = std::min(min_dev, p.norm());
  if (!(alpha > 0.0) || !(alpha < min_dev))
    throw invalid_argument_error("build_system: need 0 < alpha < device distance");
  if (!(gamma > min_dev))
    throw invalid_argument_error("build_system: need gamma > device distance");
  if (n_alpha < 2 * M + 2 || n_gamma < 2 * M + 2)
    throw invalid_argument_error("build_system: sample counts must be at least 2M+2");

  LeastSquaresSystem sys;
  sys.layout = layout;
  sys.ctx = ctx;
  sys.M = M;
  sys.n_alpha = n_alpha;
  sys.n_gamma = n_gamma;

  int rows = n_alpha + n_gamma;
  int cols = layout.n_dev() * (2 * M + 1);
  sys.matrix.resize(rows, cols);
  sys.rhs.resize(rows);
  sys.row_weights.resize(rows);

  parallel_for(rows, mode, [&](std::int64_t row) {
    bool on_alpha = row < n_alpha;
    double radius = on_alpha ? alpha : gamma;
    int n_circ = on_alpha ? n_alpha : n_gamma;
    int i = on_alpha ? (int)row : (int)row - n_alpha;
    double theta = 2.0 * pi * i / n_circ;
    Point2 p{radius * std::cos(theta), radius * std::sin(theta)};
    double w = on_alpha ? 1.0 : weight_ratio;

    sys.row_weights[row] = w;
    sys.rhs[row] = on_alpha ? -w * incident.value(p) : Complex{0.0, 0.0};

    std::vector<Complex> hank((size_t)M + 1);
    for (int d = 0; d < layout.n_dev(); ++d) {
      Point2 v = p - layout.positions[(size_t)d];
      double r = v.norm();
      specfun::hankel1_array(M, ctx.k * r, hank.data());
      Complex eip = std::exp(iu * arg_angle(v));
      Complex phase{1.0, 0.0};
      double parity = 1.0;
      for (int m = 0; m <= M; ++m) {
        sys.matrix((Eigen::Index)row, sys.col(d, m)) = w * hank[(size_t)m] * phase;
        if (m > 0)
          sys.matrix((Eigen::Index)row, sys.col(d, -m)) =
              w * parity * hank[(size_t)m] * std::conj(phase);
        phase *= eip;
        parity = -parity;
      }
    }
  });
  return sys;
}

Eigen::VectorXcd lstsq_svd(const Eigen::MatrixXcd& A, const Eigen::VectorXcd& b,
                           double rel_cutoff, int* rank_out,
                           std::vector<double>* singular_values_out) {
  lapack_int m = (lapack_int)A.rows(), n = (lapack_int)A.cols();
  Eigen::MatrixXcd a_work = A;
  Eigen::VectorXcd b_work = Eigen::VectorXcd::Zero(std::max(m, n));
  b_work.head(m) = b;
  std::vector<double> sv((size_t)std::min(m, n));
  lapack_int rank = 0;
  lapack_int info = LAPACKE_zgelsd(
      LAPACK_COL_MAJOR, m, n, 1, reinterpret_cast<lapack_complex_double*>(a_work.data()), m,
      reinterpret_cast<lapack_complex_double*>(b_work.data()), std::max(m, n), sv.data(),
      rel_cutoff, &rank);
  if (info != 0) throw numerical_error("lstsq_svd: SVD failed to converge");
  if (rank_out) *rank_out = (int)rank;
  if (singular_values_out) *singular_values_out = std::move(sv);
  return b_work.head(n);
}

SvdSolveResult svd_solve(const LeastSquaresSystem& system, double rel_cutoff) {
  if (!(rel_cutoff > 0.0) || !(rel_cutoff <= 1.0))
    throw invalid_argument_error("svd_solve: rel_cutoff must lie in (0, 1]");

  SvdSolveResult result;
  Eigen::VectorXcd x =
      lstsq_svd(system.matrix, system.rhs, rel_cutoff, &result.rank, &result.singular_values);
  result.residual = (system.matrix * x - system.rhs).norm();

  result.solution.layout = system.layout;
  result.solution.ctx = system.ctx;
  result.solution.method = multipole::Method::Svd;
  result.solution.sources.resize((size_t)system.layout.n_dev());
  for (int d = 0; d < system.layout.n_dev(); ++d) {
    auto& src = result.solution.sources[(size_t)d];
    src.center = system.layout.positions[(size_t)d];
    src.M = system.M;
    src.coeff.resize((size_t)(2 * system.M + 1));
    for (int m = -system.M; m <= system.M; ++m) src.b(m) = x[system.col(d, m)];
  }
  return result;
}

}  // namespace cloak::svdcloak
