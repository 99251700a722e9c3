#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cloak/fields.hpp"
#include "cloak/types.hpp"

namespace cloak::scenario {

enum class IncidentKind { Plane, Point };
enum class MethodKind { None, Green, Svd, Illusion };
enum class ScattererKind { None, Kite, Circle };

struct GridRequest {
  std::string name;
  std::string field;  // incident | device | total | interior | total_interior |
                      // scattered | total_scene
  fields::GridWindow window{};
  int nx = 0, ny = 0;
};

struct ScenarioConfig {
  double k = 1.0;

  IncidentKind incident = IncidentKind::Plane;
  double incident_angle = 0.0;
  Point2 incident_position{};

  double delta = 0.0;
  double sigma = 0.0;
  int n_nodes = 0;  // 0: chosen from the geometry (see default_node_count)
  int n_dev = 3;

  MethodKind method = MethodKind::None;
  int M = 0;  // 0: truncation heuristic M(delta)
  int m_multiplier = 1;

  double svd_alpha = 0.0;  // 0: (1 - sqrt(3)/2) delta
  double svd_gamma = 0.0;  // 0: 2 delta
  int svd_n_alpha = 0;     // 0: 4M + 2
  int svd_n_gamma = 0;
  double svd_weight_ratio = 1.0;
  double svd_rel_cutoff = 1e-12;

  // illusion: virtual object is a point source or a scatterer
  std::optional<Point2> virtual_point;
  Complex virtual_amplitude{1.0, 0.0};
  ScattererKind virtual_scatterer = ScattererKind::None;
  double virtual_scale = 1.0;
  Point2 virtual_center{};

  ScattererKind scatterer = ScattererKind::None;
  double scatterer_scale = 1.0;
  Point2 scatterer_center{};
  int n_src = 256;
  double src_shrink = 0.7;

  std::vector<GridRequest> grids;
  bool metrics_enabled = true;
  bool image_enabled = false;
  double image_clip = 1.0;
  std::vector<double> betas;

  std::vector<double> sweep_delta_lambdas;
  std::vector<std::string> sweep_methods;      // green | svd
  std::vector<int> sweep_multipliers;          // applied to green only

  ExecMode exec = default_exec_mode();
};

// Reads a JSON config, applies key=value overrides (dotted paths), validates.
// Validation failures throw invalid_argument_error naming the offending
// field. With lengths_in_wavelengths=true all lengths in the file are
// multiplied by 2*pi/k on load.
ScenarioConfig load_config(const std::filesystem::path& file,
                           const std::vector<std::string>& overrides = {});
ScenarioConfig parse_config(nlohmann::json spec);

// Trapezoid node count on the boundary circle keeping at least 8 nodes per
// wavelength: powers of two from 256 for the interior cloak alone, 3*2^p from
// 384 when device arcs must land on nodes.
int default_node_count(double sigma, double wavelength, bool with_devices);

// Runs one pipeline (interior, cloak-green, cloak-svd, illusion, scatter,
// metrics) and writes its artifacts plus manifest.json into out_dir.
void run_scenario(const ScenarioConfig& config, const std::string& command,
                  const std::filesystem::path& out_dir);

// Fig.-5-style sweep over delta; one record per (delta, method, multiplier)
// cell appended to results.jsonl in cell order. Per-cell failures are
// recorded in the log and the sweep continues.
void run_sweep(const ScenarioConfig& config, const std::filesystem::path& out_dir);

}  // namespace cloak::scenario
