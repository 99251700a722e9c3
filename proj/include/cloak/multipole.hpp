#pragma once

#include <span>
#include <vector>

#include "cloak/fields.hpp"
#include "cloak/geometry.hpp"
#include "cloak/types.hpp"

namespace cloak::multipole {

// M(delta) = ceil((k delta / 2)(1 + sqrt(3)/2))
int truncation_M(const WaveContext& ctx, double delta);

// One device: center x_j and coefficients b_{j,m}, |m| <= M.
struct MultipoleSource {
  Point2 center;
  int M = 0;
  std::vector<Complex> coeff;  // 2M+1 entries, index m + M

  Complex b(int m) const { return coeff[(size_t)(m + M)]; }
  Complex& b(int m) { return coeff[(size_t)(m + M)]; }
};

enum class Method { Green, Svd, Illusion };

struct CloakSolution {
  std::vector<MultipoleSource> sources;
  geometry::DeviceLayout layout;
  WaveContext ctx{1.0};
  Method method = Method::Green;
};

// Device coefficients from Green's formula restricted to each device's arc:
//   b_{j,m} = (i/4) int_{dD_j} { -(n . grad u_i) conj(U_m(y-x_j))
//                                + u_i n . grad conj(U_m(y-x_j)) } dS
// Quadrature reuses the boundary curve's global nodes, restricted per arc.
// node_mask, when non-empty, zeroes out individual nodes (used to study
// openings in the boundary).
CloakSolution green_coefficients(const fields::IncidentField& incident,
                                 const geometry::DeviceLayout& layout,
                                 const geometry::Curve& boundary, const WaveContext& ctx,
                                 int M, ExecMode mode = default_exec_mode(),
                                 std::span<const unsigned char> node_mask = {});

// Same construction applied to u_i - u_s_virt (illusion devices): the cloak
// then makes the scene scatter like the virtual object.
CloakSolution illusion_coefficients(const fields::IncidentField& incident,
                                    const fields::IncidentField& virtual_scattered,
                                    const geometry::DeviceLayout& layout,
                                    const geometry::Curve& boundary, const WaveContext& ctx,
                                    int M, ExecMode mode = default_exec_mode());

// sum_j sum_{|m|<=M} b_{j,m} V_m(x - x_j), terms accumulated pairwise in
// ascending |m|
Complex eval_device_field(const CloakSolution& solution, Point2 x);

class DeviceField final : public fields::Field {
 public:
  explicit DeviceField(CloakSolution solution) : solution_(std::move(solution)) {}
  Complex value(Point2 x) const override { return eval_device_field(solution_, x); }
  const CloakSolution& solution() const { return solution_; }

 private:
  CloakSolution solution_;
};

}  // namespace cloak::multipole
