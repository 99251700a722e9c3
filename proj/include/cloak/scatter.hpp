#pragma once

#include <vector>

#include "cloak/fields.hpp"
#include "cloak/geometry.hpp"
#include "cloak/multipole.hpp"
#include "cloak/types.hpp"

namespace cloak::scatter {

// Scattered field from a sound-soft obstacle, represented as a finite sum of
// radiating monopoles placed inside the obstacle (method of fundamental
// solutions). Radiating and Helmholtz-satisfying outside by construction; the
// achieved boundary residual is recorded, not assumed.
class ScatteredField final : public fields::IncidentField {
 public:
  ScatteredField(WaveContext ctx, std::vector<Point2> sources, std::vector<Complex> strengths,
                 double boundary_residual)
      : ctx_(ctx),
        sources_(std::move(sources)),
        strengths_(std::move(strengths)),
        boundary_residual_(boundary_residual) {}

  Complex value(Point2 x) const override;
  Grad2 gradient(Point2 x) const override;

  double boundary_residual() const { return boundary_residual_; }
  const std::vector<Point2>& source_points() const { return sources_; }
  const std::vector<Complex>& strengths() const { return strengths_; }

 private:
  WaveContext ctx_;
  std::vector<Point2> sources_;
  std::vector<Complex> strengths_;
  double boundary_residual_;
};

// Dirichlet (sound-soft) solve: monopole strengths chosen by truncated-SVD
// least squares so u_s + u_inc vanishes at 2*n_src boundary collocation
// points. Auxiliary sources sit on the boundary shrunk toward its centroid
// by src_shrink. The residual is max |u_s + u_inc| over a finer boundary
// grid, relative to max |u_inc| there.
ScatteredField solve_scattering(const geometry::Curve& obstacle, const fields::Field& incident,
                                const WaveContext& ctx, int n_src = 256,
                                double src_shrink = 0.7,
                                ExecMode mode = default_exec_mode());

// ||u_s^cloaked|| / ||u_s^bare|| on the circle |x| = probe_radius, where the
// cloaked solve sees u_i + u_d and the bare solve sees u_i alone.
double scattering_suppression(const geometry::Curve& obstacle,
                              const fields::IncidentField& incident,
                              const multipole::CloakSolution& solution, double probe_radius,
                              int n_src = 256, double src_shrink = 0.7, int n_probe = 256,
                              ExecMode mode = default_exec_mode());

}  // namespace cloak::scatter
