#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace cloak {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex iu{0.0, 1.0};

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  Point2 operator/(double s) const { return {x / s, y / s}; }

  double norm() const { return std::hypot(x, y); }
  double norm2() const { return x * x + y * y; }

  // (x, y) -> (-y, x), counterclockwise quarter turn
  Point2 perp() const { return {-y, x}; }
};

inline Point2 operator*(double s, Point2 p) { return p * s; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }

// Counterclockwise angle from (1,0), in (-pi, pi].
inline double arg_angle(Point2 v) {
  double a = std::atan2(v.y, v.x);
  if (a == -pi) a = pi;
  return a;
}

// Complex-valued 2-vector; gradients of complex fields.
struct Grad2 {
  Complex x{0.0, 0.0};
  Complex y{0.0, 0.0};

  Grad2 operator+(const Grad2& o) const { return {x + o.x, y + o.y}; }
  Grad2 operator-(const Grad2& o) const { return {x - o.x, y - o.y}; }
  Grad2 operator*(Complex s) const { return {x * s, y * s}; }
};

inline Grad2 operator*(Complex s, const Grad2& g) { return g * s; }
inline Complex dot(Point2 n, const Grad2& g) { return n.x * g.x + n.y * g.y; }

struct WaveContext {
  double k;  // wavenumber, k = 2*pi/lambda

  explicit WaveContext(double k_) : k(k_) {
    if (!(k > 0.0) || !std::isfinite(k))
      throw std::invalid_argument("WaveContext: wavenumber must be positive and finite");
  }
  double wavelength() const { return 2.0 * pi / k; }
};

// Validation failures (bad parameters, malformed configs). CLI exit code 1.
struct invalid_argument_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Evaluation at a point where the field or kernel is singular.
struct singularity_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Numerical failures (solver breakdown, non-finite results). CLI exit code 2.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Level-set search found no crossing (metrics module).
struct level_not_found_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cloak
