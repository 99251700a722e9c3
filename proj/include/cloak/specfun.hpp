#pragma once

#include <vector>

#include "cloak/types.hpp"

namespace cloak::specfun {

// Largest supported Bessel order. Covers M(50*lambda) with the doubled
// term count used in the sweeps, with ample margin.
inline constexpr int max_order = 1024;

struct BesselJY {
  double j;
  double y;
};

// J_n(t) and Y_n(t) for integer n, |n| <= max_order.
// t >= 0 for J; t > 0 for Y. Relative accuracy ~1e-13 over t in [1e-6, 1e4].
BesselJY bessel_j_y(int n, double t);

double bessel_j(int n, double t);
double bessel_y(int n, double t);

// Fills out[0..nmax] with J_0(t)..J_nmax(t). One Miller sweep; this is the
// form the quadrature loops use.
void bessel_j_array(int nmax, double t, double* out);

// Fills out[0..nmax] with Y_0(t)..Y_nmax(t) by upward recurrence.
void bessel_y_array(int nmax, double t, double* out);

// H^{(1)}_n(t) = J_n(t) + i Y_n(t).
Complex hankel1(int n, double t);
void hankel1_array(int nmax, double t, Complex* out);

enum class WaveKind { Entire, Radiating };

// Cylindrical wave basis:
//   U_m(v) = J_m(k|v|) e^{i m arg(v)}        (entire)
//   V_m(v) = H^{(1)}_m(k|v|) e^{i m arg(v)}  (radiating)
Complex cyl_wave(WaveKind kind, int m, const WaveContext& ctx, Point2 v);

// Cartesian gradient of conj(U_m(v)) with respect to the evaluation point:
//   k (v/|v|) J_m'(k|v|) e^{-im arg v} - i m J_m(k|v|) e^{-im arg v} v_perp/|v|^2
Grad2 grad_conj_entire(int m, const WaveContext& ctx, Point2 v);

// Free-space Green's function G(x,y) = (i/4) H^{(1)}_0(k|x-y|) and its
// gradient in y.
Complex greens(const WaveContext& ctx, Point2 x, Point2 y);
Grad2 greens_grad_y(const WaveContext& ctx, Point2 x, Point2 y);

}  // namespace cloak::specfun
