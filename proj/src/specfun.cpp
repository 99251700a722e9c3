#include "cloak/specfun.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <vector>

namespace cloak::specfun {

namespace {

constexpr long double pi_l = 3.14159265358979323846264338327950288L;
constexpr long double euler_gamma_l = 0.577215664901532860606512090082402431L;

// Power series below this argument, Hankel asymptotic expansion above.
// Both deliver ~1e-13 relative at the crossover.
constexpr double series_cutoff = 16.0;

// sum_k (-1)^k (t/2)^{n+2k} / (k! (n+k)!), small n only
long double series_j(int n, long double t) {
  long double half = t / 2;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= half / i;
  long double q = half * half;
  long double sum = term;
  long double peak = std::fabs(term);
  for (int k = 1; k < 400; ++k) {
    term *= -q / ((long double)k * (n + k));
    sum += term;
    peak = std::max(peak, std::fabs(term));
    if (std::fabs(term) < 1e-24L * peak) break;
  }
  return sum;
}

// A&S 9.1.11 logarithmic series, small n only
long double series_y(int n, long double t) {
  long double half = t / 2;
  long double q = half * half;

  long double finite = 0.0L;
  if (n > 0) {
    long double fact_nk = 1.0L;  // (n-k-1)! at k=0 is (n-1)!
    for (int i = 1; i < n; ++i) fact_nk *= i;
    long double qk = 1.0L, factk = 1.0L;
    for (int k = 0; k < n; ++k) {
      finite += fact_nk / factk * qk;
      if (k + 1 < n) {
        fact_nk /= (n - k - 1);
        factk *= (k + 1);
        qk *= q;
      }
    }
  }

  // sum_k (psi(k+1)+psi(n+k+1)) (-q)^k / (k! (n+k)!)
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term /= i;
  long double hk = 0.0L, hnk = 0.0L;
  for (int i = 1; i <= n; ++i) hnk += 1.0L / i;
  long double psi_sum = -2.0L * euler_gamma_l + hk + hnk;
  long double sum = psi_sum * term;
  long double peak = std::fabs(sum);
  for (int k = 1; k < 400; ++k) {
    term *= -q / ((long double)k * (n + k));
    hk += 1.0L / k;
    hnk += 1.0L / (n + k);
    psi_sum = -2.0L * euler_gamma_l + hk + hnk;
    sum += psi_sum * term;
    peak = std::max(peak, std::fabs(psi_sum * term));
    if (std::fabs(term) * (std::fabs(psi_sum) + 1.0L) < 1e-24L * (peak + 1e-300L)) break;
  }

  long double half_pow_n = 1.0L;
  for (int i = 0; i < n; ++i) half_pow_n *= half;

  long double y = -finite / (half_pow_n * pi_l) +
                  (2.0L / pi_l) * std::log(half) * series_j(n, t) -
                  half_pow_n / pi_l * sum;
  return y;
}

// Hankel's asymptotic expansion (A&S 9.2.5/9.2.9), valid for t well above n.
void asymptotic_jy(int n, long double t, long double& j, long double& y) {
  long double mu = 4.0L * n * n;
  long double p = 1.0L, q = 0.0L;
  long double u = 1.0L;
  long double prev = std::fabs(u);
  int sign_p = -1, sign_q = 1;
  for (int m = 1; m < 60; ++m) {
    u *= (mu - (2.0L * m - 1) * (2.0L * m - 1)) / (8.0L * m * t);
    if (std::fabs(u) >= prev) break;  // past the optimal truncation point
    prev = std::fabs(u);
    if (m % 2 == 1) {
      q += sign_q * u;
      sign_q = -sign_q;
    } else {
      p += sign_p * u;
      sign_p = -sign_p;
    }
    if (std::fabs(u) < 1e-22L) break;
  }
  long double chi = t - (2 * n + 1) * pi_l / 4;
  long double c = std::cos(chi), s = std::sin(chi);
  long double amp = std::sqrt(2.0L / (pi_l * t));
  j = amp * (p * c - q * s);
  y = amp * (p * s + q * c);
}

long double seed_j(int n, long double t) {
  if (t == 0.0L) return n == 0 ? 1.0L : 0.0L;
  if (t <= series_cutoff) return series_j(n, t);
  long double j, y;
  asymptotic_jy(n, t, j, y);
  return j;
}

long double seed_y(int n, long double t) {
  if (t <= series_cutoff) return series_y(n, t);
  long double j, y;
  asymptotic_jy(n, t, j, y);
  return y;
}

void check_order(int n) {
  if (n < -max_order || n > max_order)
    throw std::domain_error("bessel: order out of supported range");
}

// arrays may run one past max_order so gradients of order max_order work
void check_array_order(int nmax) {
  if (nmax > max_order + 1)
    throw std::domain_error("bessel: order out of supported range");
}

// leading-term estimate of ln J_m(t) in the decay regime m > t
long double log_j_leading(int m, long double t) {
  return m * std::log(t / 2) - std::lgamma((long double)m + 1);
}

}  // namespace

void bessel_j_array(int nmax, double t_in, double* out) {
  if (nmax < 0) throw std::domain_error("bessel_j_array: nmax < 0");
  check_array_order(nmax);
  if (t_in < 0.0) throw std::domain_error("bessel_j_array: t < 0");
  long double t = t_in;

  if (t_in == 0.0) {
    out[0] = 1.0;
    for (int m = 1; m <= nmax; ++m) out[m] = 0.0;
    return;
  }
  if (nmax == 0) {
    out[0] = (double)seed_j(0, t);
    return;
  }

  if ((long double)nmax <= t) {
    // oscillatory all the way up: upward recurrence is stable here
    long double jm1 = seed_j(0, t), jm = seed_j(1, t);
    out[0] = (double)jm1;
    out[1] = (double)jm;
    for (int m = 1; m < nmax; ++m) {
      long double jp = (2.0L * m / t) * jm - jm1;
      jm1 = jm;
      jm = jp;
      out[m + 1] = (double)jm;
    }
    return;
  }

  // Miller downward recurrence with J_0 + 2*sum J_{2k} = 1 normalization.
  // Orders whose magnitude underflows double are zero-filled so the
  // unnormalized sweep stays within long double range.
  int eff = nmax;
  while (eff > 2 && (long double)eff > t + 1 && log_j_leading(eff, t) < -760.0L) --eff;
  for (int m = eff + 1; m <= nmax; ++m) out[m] = 0.0;

  // Start far enough past the turning point m ~ t that the contaminating
  // dominant solution is suppressed below 1e-20. Near the turning point the
  // decay of J_m(t) in m follows the Airy regime, hence the cbrt term.
  int extra = 40 + (int)std::ceil(13.5 * std::cbrt((double)std::max(t, 1.0L)));
  int start = eff + extra;

  std::vector<long double> p((size_t)eff + 1);
  long double pp = 0.0L, pc = 1e-30L;
  long double norm = 0.0L;
  for (int m = start; m >= 1; --m) {
    long double pm = (2.0L * m / t) * pc - pp;
    pp = pc;
    pc = pm;
    // pc now holds p_{m-1}, pp holds p_m
    if (m - 1 <= eff) p[(size_t)m - 1] = pc;
    if ((m - 1) % 2 == 0 && m - 1 > 0) norm += pc;
  }
  norm = 2.0L * norm + pc;  // pc == p_0
  for (int m = 0; m <= eff; ++m) out[m] = (double)(p[(size_t)m] / norm);
}

void bessel_y_array(int nmax, double t_in, double* out) {
  if (nmax < 0) throw std::domain_error("bessel_y_array: nmax < 0");
  check_array_order(nmax);
  if (!(t_in > 0.0)) throw std::domain_error("bessel_y_array: t must be positive");
  long double t = t_in;

  long double ym1 = seed_y(0, t);
  out[0] = (double)ym1;
  if (nmax == 0) return;
  long double ym = seed_y(1, t);
  out[1] = (double)ym;
  for (int m = 1; m < nmax; ++m) {
    if (!std::isfinite(ym)) {
      // deep growth regime, sign is fixed negative
      for (int r = m + 1; r <= nmax; ++r) out[r] = -HUGE_VAL;
      return;
    }
    long double yp = (2.0L * m / t) * ym - ym1;
    ym1 = ym;
    ym = yp;
    out[m + 1] = (double)ym;
  }
}

BesselJY bessel_j_y(int n, double t) {
  check_order(n);
  int na = std::abs(n);
  double sgn = (n < 0 && na % 2 == 1) ? -1.0 : 1.0;
  std::vector<double> j((size_t)na + 1), y((size_t)na + 1);
  bessel_j_array(na, t, j.data());
  bessel_y_array(na, t, y.data());
  return {sgn * j[(size_t)na], sgn * y[(size_t)na]};
}

double bessel_j(int n, double t) {
  check_order(n);
  int na = std::abs(n);
  double sgn = (n < 0 && na % 2 == 1) ? -1.0 : 1.0;
  std::vector<double> j((size_t)na + 1);
  bessel_j_array(na, t, j.data());
  return sgn * j[(size_t)na];
}

double bessel_y(int n, double t) {
  check_order(n);
  int na = std::abs(n);
  double sgn = (n < 0 && na % 2 == 1) ? -1.0 : 1.0;
  std::vector<double> y((size_t)na + 1);
  bessel_y_array(na, t, y.data());
  return sgn * y[(size_t)na];
}

Complex hankel1(int n, double t) {
  if (!(t > 0.0)) throw std::domain_error("hankel1: t must be positive");
  auto [j, y] = bessel_j_y(n, t);
  return {j, y};
}

void hankel1_array(int nmax, double t, Complex* out) {
  std::vector<double> j((size_t)nmax + 1), y((size_t)nmax + 1);
  bessel_j_array(nmax, t, j.data());
  bessel_y_array(nmax, t, y.data());
  for (int m = 0; m <= nmax; ++m) out[m] = {j[(size_t)m], y[(size_t)m]};
}

Complex cyl_wave(WaveKind kind, int m, const WaveContext& ctx, Point2 v) {
  double r = v.norm();
  if (kind == WaveKind::Radiating && r == 0.0)
    throw singularity_error("cyl_wave: radiating wave evaluated at its center");
  double t = ctx.k * r;
  double phase = (r == 0.0) ? 0.0 : arg_angle(v);
  Complex radial = (kind == WaveKind::Entire) ? Complex(bessel_j(m, t), 0.0)
                                              : hankel1(m, t);
  return radial * std::exp(iu * (double)m * phase);
}

Grad2 grad_conj_entire(int m, const WaveContext& ctx, Point2 v) {
  double r = v.norm();
  if (r == 0.0) throw singularity_error("grad_conj_entire: gradient singular at v = 0");
  double t = ctx.k * r;

  int na = std::abs(m);
  std::vector<double> j((size_t)na + 2);
  bessel_j_array(na + 1, t, j.data());
  double jm = j[(size_t)na];
  double jprime = (na == 0) ? -j[1] : 0.5 * (j[(size_t)na - 1] - j[(size_t)na + 1]);
  if (m < 0 && na % 2 == 1) {
    jm = -jm;
    jprime = -jprime;
  }

  double phase = arg_angle(v);
  Complex e = std::exp(-iu * (double)m * phase);
  Point2 vhat = v / r;
  Point2 vperp = v.perp();

  Complex radial = ctx.k * jprime * e;
  Complex angular = -iu * (double)m * jm * e / (r * r);
  return {radial * vhat.x + angular * vperp.x, radial * vhat.y + angular * vperp.y};
}

Complex greens(const WaveContext& ctx, Point2 x, Point2 y) {
  double r = (x - y).norm();
  if (r == 0.0) throw singularity_error("greens: evaluated on the diagonal x = y");
  return 0.25 * iu * hankel1(0, ctx.k * r);
}

Grad2 greens_grad_y(const WaveContext& ctx, Point2 x, Point2 y) {
  Point2 d = y - x;
  double r = d.norm();
  if (r == 0.0) throw singularity_error("greens_grad_y: evaluated on the diagonal x = y");
  Complex f = -0.25 * iu * ctx.k * hankel1(1, ctx.k * r) / r;
  return {f * d.x, f * d.y};
}

}  // namespace cloak::specfun
