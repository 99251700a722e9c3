#include "cloak/multipole.hpp"

#include <cmath>

#include "cloak/specfun.hpp"

namespace cloak::multipole {

int truncation_M(const WaveContext& ctx, double delta) {
  if (!(delta > 0.0)) throw invalid_argument_error("truncation_M: delta must be positive");
  return (int)std::ceil(0.5 * ctx.k * delta * (1.0 + std::sqrt(3.0) / 2.0));
}

namespace {

Complex pairwise_sum(std::span<const Complex> terms) {
  if (terms.size() == 1) return terms[0];
  if (terms.empty()) return {0.0, 0.0};
  std::size_t half = terms.size() / 2;
  return pairwise_sum(terms.first(half)) + pairwise_sum(terms.subspan(half));
}

}  // namespace

CloakSolution green_coefficients(const fields::IncidentField& incident,
                                 const geometry::DeviceLayout& layout,
                                 const geometry::Curve& boundary, const WaveContext& ctx,
                                 int M, ExecMode mode,
                                 std::span<const unsigned char> node_mask) {
  if (M < 0) throw invalid_argument_error("green_coefficients: M must be non-negative");
  if (layout.node_device.size() != boundary.size())
    throw invalid_argument_error("green_coefficients: layout built for a different curve");
  if (!node_mask.empty() && node_mask.size() != boundary.size())
    throw invalid_argument_error("green_coefficients: node mask size mismatch");

  const auto& nodes = boundary.nodes();
  std::size_t n_nodes = nodes.size();
  std::size_t n_coeff = (size_t)(2 * M + 1);

  // per-node contributions, reduced serially afterwards so the result does
  // not depend on the thread count
  std::vector<Complex> contrib(n_nodes * n_coeff);
  parallel_for((std::int64_t)n_nodes, mode, [&](std::int64_t i) {
    Complex* row = contrib.data() + (size_t)i * n_coeff;
    if (!node_mask.empty() && node_mask[(size_t)i] == 0) {
      for (std::size_t c = 0; c < n_coeff; ++c) row[c] = {0.0, 0.0};
      return;
    }
    const auto& node = nodes[(size_t)i];
    Point2 xj = layout.positions[(size_t)layout.node_device[(size_t)i]];
    Point2 v = node.position - xj;
    double r = v.norm();
    double t = ctx.k * r;

    std::vector<double> j((size_t)M + 2);
    specfun::bessel_j_array(M + 1, t, j.data());

    Grad2 gu = incident.gradient(node.position);
    Complex mono = -dot(node.normal, gu);
    Complex dip = incident.value(node.position);

    double phi = arg_angle(v);
    double n_dot_vhat = dot(node.normal, v) / r;
    double n_dot_vperp_over_r2 = dot(node.normal, v.perp()) / (r * r);
    Complex e_neg = std::exp(-iu * phi);  // e^{-i phi}

    Complex phase_pos{1.0, 0.0};  // e^{-i m phi} for m >= 0
    double parity = 1.0;
    for (int m = 0; m <= M; ++m) {
      double jm = j[(size_t)m];
      double jp = (m == 0) ? -j[1] : 0.5 * (j[(size_t)m - 1] - j[(size_t)m + 1]);
      // m >= 0 term
      Complex ndgrad = phase_pos * Complex(ctx.k * n_dot_vhat * jp, 0.0) -
                       iu * (double)m * jm * n_dot_vperp_over_r2 * phase_pos;
      row[(size_t)(m + M)] = node.weight * (mono * jm * phase_pos + dip * ndgrad);
      if (m > 0) {
        // m < 0 via J_{-m} = (-1)^m J_m; conj phase flips
        Complex phase_neg = std::conj(phase_pos);
        Complex ndgrad_neg = parity * (phase_neg * Complex(ctx.k * n_dot_vhat * jp, 0.0) +
                                       iu * (double)m * jm * n_dot_vperp_over_r2 * phase_neg);
        row[(size_t)(M - m)] =
            node.weight * (mono * parity * jm * phase_neg + dip * ndgrad_neg);
      }
      phase_pos *= e_neg;
      parity = -parity;
    }
  });

  CloakSolution sol;
  sol.layout = layout;
  sol.ctx = ctx;
  sol.method = Method::Green;
  sol.sources.resize((size_t)layout.n_dev());
  for (int d = 0; d < layout.n_dev(); ++d) {
    sol.sources[(size_t)d].center = layout.positions[(size_t)d];
    sol.sources[(size_t)d].M = M;
    sol.sources[(size_t)d].coeff.assign(n_coeff, Complex{0.0, 0.0});
  }
  for (std::size_t i = 0; i < n_nodes; ++i) {
    auto& coeff = sol.sources[(size_t)layout.node_device[i]].coeff;
    const Complex* row = contrib.data() + i * n_coeff;
    for (std::size_t c = 0; c < n_coeff; ++c) coeff[c] += row[c];
  }
  for (auto& src : sol.sources)
    for (auto& b : src.coeff) b *= 0.25 * iu;
  return sol;
}

CloakSolution illusion_coefficients(const fields::IncidentField& incident,
                                    const fields::IncidentField& virtual_scattered,
                                    const geometry::DeviceLayout& layout,
                                    const geometry::Curve& boundary, const WaveContext& ctx,
                                    int M, ExecMode mode) {
  struct Difference final : fields::IncidentField {
    const fields::IncidentField* a;
    const fields::IncidentField* b;
    Complex value(Point2 x) const override { return a->value(x) - b->value(x); }
    Grad2 gradient(Point2 x) const override { return a->gradient(x) - b->gradient(x); }
  };
  Difference diff;
  diff.a = &incident;
  diff.b = &virtual_scattered;
  CloakSolution sol = green_coefficients(diff, layout, boundary, ctx, M, mode);
  sol.method = Method::Illusion;
  return sol;
}

Complex eval_device_field(const CloakSolution& solution, Point2 x) {
  if (solution.sources.empty()) return {0.0, 0.0};
  int M = 0;
  for (const auto& src : solution.sources) M = std::max(M, src.M);

  // terms ordered by ascending |m|: coefficient magnitudes grow with |m|
  // while V_m shrinks, so products are formed first and summed pairwise
  std::vector<Complex> terms;
  terms.reserve(solution.sources.size() * (size_t)(2 * M + 1));

  std::vector<std::vector<Complex>> hank(solution.sources.size());
  std::vector<Complex> eip(solution.sources.size());
  std::vector<double> phi(solution.sources.size());
  for (std::size_t s = 0; s < solution.sources.size(); ++s) {
    Point2 v = x - solution.sources[s].center;
    double r = v.norm();
    if (r == 0.0) throw singularity_error("eval_device_field: x coincides with a device");
    hank[s].resize((size_t)solution.sources[s].M + 1);
    specfun::hankel1_array(solution.sources[s].M, solution.ctx.k * r, hank[s].data());
    phi[s] = arg_angle(v);
    eip[s] = std::exp(iu * phi[s]);
  }

  std::vector<Complex> phase(solution.sources.size(), Complex{1.0, 0.0});
  double parity = 1.0;
  for (int m = 0; m <= M; ++m) {
    for (std::size_t s = 0; s < solution.sources.size(); ++s) {
      const auto& src = solution.sources[s];
      if (m > src.M) continue;
      Complex vm = hank[s][(size_t)m] * phase[s];
      terms.push_back(src.b(m) * vm);
      if (m > 0) {
        Complex vneg = parity * hank[s][(size_t)m] * std::conj(phase[s]);
        terms.push_back(src.b(-m) * vneg);
      }
      phase[s] *= eip[s];
    }
    parity = -parity;
  }
  return pairwise_sum(terms);
}

}  // namespace cloak::multipole
