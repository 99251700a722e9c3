#include "cloak/scatter.hpp"

#include <cmath>

#include "cloak/specfun.hpp"
#include "cloak/svdcloak.hpp"

namespace cloak::scatter {

Complex ScatteredField::value(Point2 x) const {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < sources_.size(); ++i)
    s += strengths_[i] * specfun::greens(ctx_, x, sources_[i]);
  return s;
}

Grad2 ScatteredField::gradient(Point2 x) const {
  Grad2 g;
  for (std::size_t i = 0; i < sources_.size(); ++i)
    g = g + strengths_[i] * specfun::greens_grad_y(ctx_, sources_[i], x);
  return g;
}

ScatteredField solve_scattering(const geometry::Curve& obstacle, const fields::Field& incident,
                                const WaveContext& ctx, int n_src, double src_shrink,
                                ExecMode mode) {
  if (n_src < 16) throw invalid_argument_error("solve_scattering: need at least 16 sources");
  if (!(src_shrink > 0.0) || !(src_shrink < 1.0))
    throw invalid_argument_error("solve_scattering: src_shrink must lie in (0, 1)");

  Point2 c = obstacle.centroid();
  std::vector<Point2> sources((size_t)n_src);
  for (int s = 0; s < n_src; ++s) {
    double t = 2.0 * pi * s / n_src;
    sources[(size_t)s] = c + src_shrink * (obstacle.point_at(t) - c);
  }

  int n_coll = 2 * n_src;
  Eigen::MatrixXcd A(n_coll, n_src);
  Eigen::VectorXcd b(n_coll);
  parallel_for(n_coll, mode, [&](std::int64_t i) {
    Point2 x = obstacle.point_at(2.0 * pi * (double)i / n_coll);
    for (int s = 0; s < n_src; ++s)
      A((Eigen::Index)i, s) = specfun::greens(ctx, x, sources[(size_t)s]);
    b[(Eigen::Index)i] = -incident.value(x);
  });

  Eigen::VectorXcd strengths = svdcloak::lstsq_svd(A, b, 1e-13);

  // residual on a finer boundary grid than the collocation grid
  int n_check = 4 * n_src;
  std::vector<double> total((size_t)n_check), inc((size_t)n_check);
  parallel_for(n_check, mode, [&](std::int64_t i) {
    Point2 x = obstacle.point_at(2.0 * pi * ((double)i + 0.5) / n_check);
    Complex ui = incident.value(x);
    Complex us{0.0, 0.0};
    for (int s = 0; s < n_src; ++s)
      us += strengths[s] * specfun::greens(ctx, x, sources[(size_t)s]);
    total[(size_t)i] = std::abs(ui + us);
    inc[(size_t)i] = std::abs(ui);
  });
  double max_total = 0.0, max_inc = 0.0;
  for (int i = 0; i < n_check; ++i) {
    max_total = std::max(max_total, total[(size_t)i]);
    max_inc = std::max(max_inc, inc[(size_t)i]);
  }
  double residual = (max_inc > 0.0) ? max_total / max_inc : max_total;

  std::vector<Complex> st((size_t)n_src);
  for (int s = 0; s < n_src; ++s) st[(size_t)s] = strengths[s];
  return ScatteredField(ctx, std::move(sources), std::move(st), residual);
}

double scattering_suppression(const geometry::Curve& obstacle,
                              const fields::IncidentField& incident,
                              const multipole::CloakSolution& solution, double probe_radius,
                              int n_src, double src_shrink, int n_probe, ExecMode mode) {
  for (const auto& node : obstacle.nodes()) {
    bool inside_D = solution.layout.sigma > 0.0 ? node.position.norm() < solution.layout.sigma
                                                : true;
    if (!inside_D || !geometry::in_region_R(node.position, solution.layout))
      throw invalid_argument_error(
          "scattering_suppression: obstacle leaves the effective cloaked region");
  }

  multipole::DeviceField device(solution);
  struct Sum final : fields::Field {
    const fields::Field* a;
    const fields::Field* b;
    Complex value(Point2 x) const override { return a->value(x) + b->value(x); }
  };
  Sum cloaked_incident;
  cloaked_incident.a = &incident;
  cloaked_incident.b = &device;

  ScatteredField bare = solve_scattering(obstacle, incident, solution.ctx, n_src, src_shrink, mode);
  ScatteredField cloaked =
      solve_scattering(obstacle, cloaked_incident, solution.ctx, n_src, src_shrink, mode);

  double num = 0.0, den = 0.0;
  for (int i = 0; i < n_probe; ++i) {
    double theta = 2.0 * pi * i / n_probe;
    Point2 p{probe_radius * std::cos(theta), probe_radius * std::sin(theta)};
    num += std::norm(cloaked.value(p));
    den += std::norm(bare.value(p));
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::sqrt(num / den);
}

}  // namespace cloak::scatter
