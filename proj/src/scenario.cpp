#include "cloak/scenario.hpp"

#include <fstream>
#include <map>
#include <memory>

#include <nlohmann/json.hpp>

#include "cloak/geometry.hpp"
#include "cloak/interior.hpp"
#include "cloak/io.hpp"
#include "cloak/metrics.hpp"
#include "cloak/multipole.hpp"
#include "cloak/scatter.hpp"
#include "cloak/svdcloak.hpp"

namespace cloak::scenario {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw invalid_argument_error("config: " + path + ": " + message);
}

const json* find(const json& root, const std::string& path) {
  const json* cur = &root;
  std::size_t begin = 0;
  while (begin <= path.size()) {
    std::size_t end = path.find('.', begin);
    std::string key = path.substr(begin, end == std::string::npos ? end : end - begin);
    if (!cur->is_object() || !cur->contains(key)) return nullptr;
    cur = &(*cur)[key];
    if (end == std::string::npos) break;
    begin = end + 1;
  }
  return cur;
}

double get_num(const json& root, const std::string& path, double fallback) {
  const json* v = find(root, path);
  if (!v) return fallback;
  if (!v->is_number()) fail(path, "expected a number");
  return v->get<double>();
}

int get_int(const json& root, const std::string& path, int fallback) {
  const json* v = find(root, path);
  if (!v) return fallback;
  if (!v->is_number_integer()) fail(path, "expected an integer");
  return v->get<int>();
}

bool get_bool(const json& root, const std::string& path, bool fallback) {
  const json* v = find(root, path);
  if (!v) return fallback;
  if (!v->is_boolean()) fail(path, "expected a boolean");
  return v->get<bool>();
}

std::string get_str(const json& root, const std::string& path, const std::string& fallback) {
  const json* v = find(root, path);
  if (!v) return fallback;
  if (!v->is_string()) fail(path, "expected a string");
  return v->get<std::string>();
}

Point2 get_point(const json& root, const std::string& path, Point2 fallback) {
  const json* v = find(root, path);
  if (!v) return fallback;
  if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number())
    fail(path, "expected [x, y]");
  return {(*v)[0].get<double>(), (*v)[1].get<double>()};
}

ScattererKind parse_scatterer_kind(const std::string& s, const std::string& path) {
  if (s == "none") return ScattererKind::None;
  if (s == "kite") return ScattererKind::Kite;
  if (s == "circle") return ScattererKind::Circle;
  fail(path, "unknown scatterer type '" + s + "'");
}

}  // namespace

int default_node_count(double sigma, double wavelength, bool with_devices) {
  double needed = 8.0 * (2.0 * pi * sigma / wavelength);
  int n = with_devices ? 384 : 256;
  while ((double)n < needed) n *= 2;
  return n;
}

ScenarioConfig parse_config(json spec) {
  ScenarioConfig c;
  c.k = get_num(spec, "wave.k", 1.0);
  if (!(c.k > 0.0)) fail("wave.k", "wavenumber must be positive");
  double lambda = 2.0 * pi / c.k;
  double unit = get_bool(spec, "lengths_in_wavelengths", false) ? lambda : 1.0;

  std::string inc = get_str(spec, "incident.type", "plane");
  if (inc == "plane") {
    c.incident = IncidentKind::Plane;
    c.incident_angle = get_num(spec, "incident.angle", 0.0);
  } else if (inc == "point") {
    c.incident = IncidentKind::Point;
    c.incident_position = get_point(spec, "incident.position", {0.0, 0.0}) * unit;
  } else {
    fail("incident.type", "must be 'plane' or 'point'");
  }

  c.delta = get_num(spec, "geometry.delta", 0.0) * unit;
  c.sigma = get_num(spec, "geometry.sigma", 0.0) * unit;
  c.n_nodes = get_int(spec, "geometry.n_nodes", 0);
  c.n_dev = get_int(spec, "geometry.n_dev", 3);
  if (c.n_dev < 1) fail("geometry.n_dev", "need at least one device");
  if (c.delta < 0.0) fail("geometry.delta", "must be positive");
  if (c.sigma < 0.0) fail("geometry.sigma", "must be positive");

  std::string method = get_str(spec, "method.name", "none");
  if (method == "none")
    c.method = MethodKind::None;
  else if (method == "green")
    c.method = MethodKind::Green;
  else if (method == "svd")
    c.method = MethodKind::Svd;
  else if (method == "illusion")
    c.method = MethodKind::Illusion;
  else
    fail("method.name", "unknown method '" + method + "'");

  c.M = get_int(spec, "method.M", 0);
  if (c.M < 0) fail("method.M", "must be non-negative");
  c.m_multiplier = get_int(spec, "method.m_multiplier", 1);
  if (c.m_multiplier < 1) fail("method.m_multiplier", "must be at least 1");

  if (find(spec, "method.svd") && c.method != MethodKind::Svd)
    fail("method.svd", "svd settings given but method is not 'svd'");
  c.svd_alpha = get_num(spec, "method.svd.alpha", 0.0) * unit;
  c.svd_gamma = get_num(spec, "method.svd.gamma", 0.0) * unit;
  c.svd_n_alpha = get_int(spec, "method.svd.n_alpha", 0);
  c.svd_n_gamma = get_int(spec, "method.svd.n_gamma", 0);
  c.svd_weight_ratio = get_num(spec, "method.svd.weight_ratio", 1.0);
  c.svd_rel_cutoff = get_num(spec, "method.svd.rel_cutoff", 1e-12);

  if (find(spec, "illusion") && c.method != MethodKind::Illusion)
    fail("illusion", "illusion settings given but method is not 'illusion'");
  if (const json* v = find(spec, "illusion.virtual_point")) {
    (void)v;
    c.virtual_point = get_point(spec, "illusion.virtual_point", {0.0, 0.0}) * unit;
    Point2 amp = get_point(spec, "illusion.virtual_amplitude", {1.0, 0.0});
    c.virtual_amplitude = {amp.x, amp.y};
  }
  if (find(spec, "illusion.virtual_scatterer")) {
    c.virtual_scatterer = parse_scatterer_kind(
        get_str(spec, "illusion.virtual_scatterer.type", "none"), "illusion.virtual_scatterer.type");
    c.virtual_scale = get_num(spec, "illusion.virtual_scatterer.scale", 1.0) * unit;
    c.virtual_center = get_point(spec, "illusion.virtual_scatterer.center", {0.0, 0.0}) * unit;
  }

  c.scatterer = parse_scatterer_kind(get_str(spec, "scatterer.type", "none"), "scatterer.type");
  c.scatterer_scale = get_num(spec, "scatterer.scale", 1.0) * unit;
  c.scatterer_center = get_point(spec, "scatterer.center", {0.0, 0.0}) * unit;
  c.n_src = get_int(spec, "scatterer.n_src", 256);
  c.src_shrink = get_num(spec, "scatterer.src_shrink", 0.7);
  if (c.scatterer != ScattererKind::None && !(c.scatterer_scale > 0.0))
    fail("scatterer.scale", "must be positive");

  if (const json* grids = find(spec, "outputs.grids")) {
    if (!grids->is_array()) fail("outputs.grids", "expected an array");
    for (std::size_t i = 0; i < grids->size(); ++i) {
      const json& g = (*grids)[i];
      std::string path = "outputs.grids[" + std::to_string(i) + "]";
      GridRequest req;
      req.name = g.value("name", std::string{});
      req.field = g.value("field", std::string{});
      if (req.name.empty()) fail(path + ".name", "required");
      if (req.field.empty()) fail(path + ".field", "required");
      if (!g.contains("window") || !g["window"].is_array() || g["window"].size() != 4)
        fail(path + ".window", "expected [x_min, x_max, y_min, y_max]");
      req.window = {g["window"][0].get<double>() * unit, g["window"][1].get<double>() * unit,
                    g["window"][2].get<double>() * unit, g["window"][3].get<double>() * unit};
      if (!(req.window.x_max > req.window.x_min) || !(req.window.y_max > req.window.y_min))
        fail(path + ".window", "window must have positive extent");
      if (!g.contains("resolution") || !g["resolution"].is_array() || g["resolution"].size() != 2)
        fail(path + ".resolution", "expected [nx, ny]");
      req.nx = g["resolution"][0].get<int>();
      req.ny = g["resolution"][1].get<int>();
      if (req.nx < 2 || req.ny < 2) fail(path + ".resolution", "must be at least 2x2");
      c.grids.push_back(req);
    }
  }
  c.metrics_enabled = get_bool(spec, "outputs.metrics", true);
  c.image_enabled = get_bool(spec, "outputs.image", false);
  c.image_clip = get_num(spec, "outputs.image_clip", 1.0);
  if (!(c.image_clip > 0.0)) fail("outputs.image_clip", "must be positive");
  if (const json* betas = find(spec, "outputs.beta")) {
    if (betas->is_number()) {
      c.betas.push_back(betas->get<double>());
    } else if (betas->is_array()) {
      for (const auto& b : *betas) {
        if (!b.is_number()) fail("outputs.beta", "expected numbers");
        c.betas.push_back(b.get<double>());
      }
    } else {
      fail("outputs.beta", "expected a number or an array of numbers");
    }
  }

  if (const json* sw = find(spec, "sweep")) {
    if (const json* d = find(*sw, "delta_lambdas")) {
      if (!d->is_array()) fail("sweep.delta_lambdas", "expected an array");
      for (const auto& v : *d) c.sweep_delta_lambdas.push_back(v.get<double>());
    }
    if (const json* m = find(*sw, "methods")) {
      for (const auto& v : *m) {
        std::string name = v.get<std::string>();
        if (name != "green" && name != "svd") fail("sweep.methods", "must be 'green' or 'svd'");
        c.sweep_methods.push_back(name);
      }
    }
    if (const json* m = find(*sw, "m_multipliers")) {
      for (const auto& v : *m) {
        int mult = v.get<int>();
        if (mult < 1) fail("sweep.m_multipliers", "must be at least 1");
        c.sweep_multipliers.push_back(mult);
      }
    }
  }

  if (find(spec, "parallel"))
    c.exec = get_bool(spec, "parallel", true) ? ExecMode::OpenMP : ExecMode::Serial;
  return c;
}

namespace {

void apply_override(json& spec, const std::string& kv) {
  std::size_t eq = kv.find('=');
  if (eq == std::string::npos)
    throw invalid_argument_error("override '" + kv + "' is not of the form key=value");
  std::string path = kv.substr(0, eq), value = kv.substr(eq + 1);
  json parsed;
  try {
    parsed = json::parse(value);
  } catch (const json::parse_error&) {
    parsed = value;  // plain string
  }
  json* cur = &spec;
  std::size_t begin = 0;
  while (true) {
    std::size_t end = path.find('.', begin);
    std::string key = path.substr(begin, end == std::string::npos ? end : end - begin);
    if (key.empty()) throw invalid_argument_error("override '" + kv + "': empty key segment");
    if (end == std::string::npos) {
      (*cur)[key] = parsed;
      break;
    }
    cur = &(*cur)[key];
    begin = end + 1;
  }
}

}  // namespace

ScenarioConfig load_config(const std::filesystem::path& file,
                           const std::vector<std::string>& overrides) {
  std::ifstream in(file);
  if (!in) throw invalid_argument_error("cannot open config file " + file.string());
  json spec;
  try {
    spec = json::parse(in);
  } catch (const json::parse_error& e) {
    throw invalid_argument_error("config: " + file.string() + ": " + e.what());
  }
  for (const auto& kv : overrides) apply_override(spec, kv);
  return parse_config(std::move(spec));
}

namespace {

std::shared_ptr<const fields::IncidentField> make_incident(const ScenarioConfig& c,
                                                           const WaveContext& ctx) {
  if (c.incident == IncidentKind::Plane)
    return std::make_shared<fields::PlaneWave>(ctx, c.incident_angle);
  return std::make_shared<fields::PointSource>(ctx, c.incident_position);
}

geometry::Curve make_obstacle(ScattererKind kind, double scale, Point2 center, int n_nodes) {
  if (kind == ScattererKind::Kite) return geometry::kite_curve(scale, center, n_nodes);
  return geometry::circle_curve(scale, center, n_nodes);
}

struct SumField final : fields::Field {
  std::vector<const fields::Field*> parts;
  Complex value(Point2 x) const override {
    Complex s{0.0, 0.0};
    for (const auto* f : parts) s += f->value(x);
    return s;
  }
};

class Emitter {
 public:
  Emitter(const ScenarioConfig& config, std::filesystem::path out_dir)
      : config_(config), out_dir_(std::move(out_dir)) {
    std::filesystem::create_directories(out_dir_);
  }

  void grids(const std::map<std::string, const fields::Field*>& available,
             const std::string& provenance) {
    for (const auto& req : config_.grids) {
      auto it = available.find(req.field);
      if (it == available.end()) {
        std::string known;
        for (const auto& [k, v] : available) known += (known.empty() ? "" : ", ") + k;
        fail("outputs.grids." + req.name + ".field",
             "'" + req.field + "' not available here (have: " + known + ")");
      }
      fields::FieldGrid grid =
          fields::eval_grid(*it->second, req.window, req.nx, req.ny, config_.exec);
      std::string base = req.name + ".grid.txt";
      io::write_field_grid(out_dir_ / base, grid);
      files_.push_back(base);
      io::write_grid_metadata(out_dir_ / (req.name + ".meta.json"), grid,
                              provenance + ":" + req.field);
      files_.push_back(req.name + ".meta.json");
      if (config_.image_enabled) {
        io::write_ppm(out_dir_ / (req.name + ".ppm"), grid, config_.image_clip);
        files_.push_back(req.name + ".ppm");
      }
    }
  }

  void coefficients(const multipole::CloakSolution& sol) {
    io::write_coefficients(out_dir_ / "coefficients.txt", sol);
    files_.push_back("coefficients.txt");
  }

  void reports(const std::vector<metrics::CloakReport>& reports, const std::string& name) {
    std::ofstream out(out_dir_ / name);
    for (const auto& r : reports) out << io::report_to_json(r).dump() << '\n';
    files_.push_back(name);
  }

  void json_file(const nlohmann::json& j, const std::string& name) {
    std::ofstream out(out_dir_ / name);
    out << j.dump(2) << '\n';
    files_.push_back(name);
  }

  void raw_file(const std::string& content, const std::string& name) {
    std::ofstream out(out_dir_ / name);
    out << content;
    files_.push_back(name);
  }

  void manifest() { io::write_manifest(out_dir_, files_); }

 private:
  const ScenarioConfig& config_;
  std::filesystem::path out_dir_;
  std::vector<std::string> files_;
};

struct CloakPipeline {
  geometry::Curve boundary;
  geometry::DeviceLayout layout;
  int M;
  multipole::CloakSolution solution;
};

int effective_M(const ScenarioConfig& c, const WaveContext& ctx) {
  int base = c.M > 0 ? c.M : multipole::truncation_M(ctx, c.delta);
  return base * c.m_multiplier;
}

CloakPipeline build_cloak(const ScenarioConfig& c, MethodKind method, const WaveContext& ctx,
                          const fields::IncidentField& incident) {
  if (!(c.delta > 0.0)) fail("geometry.delta", "required for cloak methods");
  if (!(c.sigma > 0.0)) fail("geometry.sigma", "required for cloak methods");
  int n = c.n_nodes > 0 ? c.n_nodes : default_node_count(c.sigma, ctx.wavelength(), true);
  geometry::Curve boundary = geometry::circle_curve(c.sigma, {0.0, 0.0}, n);
  geometry::DeviceLayout layout = geometry::ring_layout(c.n_dev, c.delta, c.sigma, boundary);
  int M = effective_M(c, ctx);

  multipole::CloakSolution sol;
  if (method == MethodKind::Green) {
    sol = multipole::green_coefficients(incident, layout, boundary, ctx, M, c.exec);
  } else if (method == MethodKind::Svd) {
    double alpha = c.svd_alpha > 0.0 ? c.svd_alpha : geometry::optimal_effective_radius(c.delta);
    double gamma = c.svd_gamma > 0.0 ? c.svd_gamma : 2.0 * c.delta;
    int n_alpha = c.svd_n_alpha > 0 ? c.svd_n_alpha : 4 * M + 2;
    int n_gamma = c.svd_n_gamma > 0 ? c.svd_n_gamma : 4 * M + 2;
    auto sys = svdcloak::build_system(incident, layout, ctx, alpha, gamma, M, n_alpha, n_gamma,
                                      c.svd_weight_ratio, c.exec);
    sol = svdcloak::svd_solve(sys, c.svd_rel_cutoff).solution;
  } else if (method == MethodKind::Illusion) {
    std::shared_ptr<const fields::IncidentField> virt;
    if (c.virtual_point) {
      auto src = std::make_shared<fields::PointSource>(ctx, *c.virtual_point);
      virt = std::make_shared<fields::Superposition>(
          std::vector<std::shared_ptr<const fields::IncidentField>>{src},
          std::vector<Complex>{c.virtual_amplitude});
    } else if (c.virtual_scatterer != ScattererKind::None) {
      auto obstacle = make_obstacle(c.virtual_scatterer, c.virtual_scale, c.virtual_center,
                                    std::max(256, c.n_src));
      virt = std::make_shared<scatter::ScatteredField>(
          scatter::solve_scattering(obstacle, incident, ctx, c.n_src, c.src_shrink, c.exec));
    } else {
      fail("illusion", "illusion method needs a virtual_point or virtual_scatterer");
    }
    sol = multipole::illusion_coefficients(incident, *virt, layout, boundary, ctx, M, c.exec);
  } else {
    fail("method.name", "no cloak method configured");
  }
  return {std::move(boundary), std::move(layout), M, std::move(sol)};
}

std::string method_name(MethodKind m) {
  switch (m) {
    case MethodKind::Green: return "green";
    case MethodKind::Svd: return "svd";
    case MethodKind::Illusion: return "illusion";
    default: return "none";
  }
}

std::vector<metrics::CloakReport> make_reports(const ScenarioConfig& c,
                                               const fields::IncidentField& incident,
                                               const CloakPipeline& pipe, MethodKind method) {
  metrics::CloakReport base;
  base.delta = c.delta;
  base.sigma = c.sigma;
  base.M = pipe.M;
  base.method = method_name(method);
  base.interior_error = metrics::interior_error(incident, pipe.solution, c.delta, 256, c.exec);
  base.radiation_error = metrics::radiation_error(incident, pipe.solution, c.delta, 256, c.exec);
  std::vector<metrics::CloakReport> reports;
  if (c.betas.empty() || pipe.layout.n_dev() != 3) {
    reports.push_back(base);
  } else {
    for (double beta : c.betas) {
      metrics::CloakReport r = base;
      r.beta = beta;
      r.device_radius_over_delta = metrics::device_radius_estimate(pipe.solution, beta);
      reports.push_back(r);
    }
  }
  return reports;
}

MethodKind command_method(const ScenarioConfig& c, const std::string& command) {
  MethodKind from_command = MethodKind::None;
  if (command == "cloak-green") from_command = MethodKind::Green;
  if (command == "cloak-svd") from_command = MethodKind::Svd;
  if (command == "illusion") from_command = MethodKind::Illusion;
  if (from_command == MethodKind::None) return c.method;
  if (c.method != MethodKind::None && c.method != from_command)
    fail("method.name", "config method '" + method_name(c.method) +
                            "' conflicts with command '" + command + "'");
  return from_command;
}

}  // namespace

void run_scenario(const ScenarioConfig& config, const std::string& command,
                  const std::filesystem::path& out_dir) {
  WaveContext ctx(config.k);
  auto incident = make_incident(config, ctx);
  Emitter emit(config, out_dir);

  if (command == "interior") {
    if (!(config.sigma > 0.0)) fail("geometry.sigma", "required for the interior cloak");
    int n = config.n_nodes > 0 ? config.n_nodes
                               : default_node_count(config.sigma, ctx.wavelength(), false);
    geometry::Curve boundary = geometry::circle_curve(config.sigma, {0.0, 0.0}, n);
    interior::InteriorCloak cloak(interior::build_densities(*incident, boundary), ctx);
    SumField total;
    total.parts = {incident.get(), &cloak};
    emit.grids({{"incident", incident.get()}, {"interior", &cloak}, {"total_interior", &total}},
               "interior");
    emit.manifest();
    return;
  }

  if (command == "cloak-green" || command == "cloak-svd" || command == "illusion" ||
      command == "metrics") {
    MethodKind method = command_method(config, command);
    if (method == MethodKind::None) fail("method.name", "required for '" + command + "'");
    CloakPipeline pipe = build_cloak(config, method, ctx, *incident);
    multipole::DeviceField device(pipe.solution);
    SumField total;
    total.parts = {incident.get(), &device};

    if (command != "metrics") {
      emit.coefficients(pipe.solution);
      emit.grids({{"incident", incident.get()}, {"device", &device}, {"total", &total}},
                 method_name(method));
    }
    if (config.metrics_enabled || command == "metrics")
      emit.reports(make_reports(config, *incident, pipe, method), "metrics.jsonl");
    emit.manifest();
    return;
  }

  if (command == "scatter") {
    if (config.scatterer == ScattererKind::None)
      fail("scatterer.type", "required for the scatter command");
    geometry::Curve obstacle =
        make_obstacle(config.scatterer, config.scatterer_scale, config.scatterer_center,
                      std::max(256, config.n_src));
    scatter::ScatteredField bare = scatter::solve_scattering(obstacle, *incident, ctx,
                                                             config.n_src, config.src_shrink,
                                                             config.exec);
    SumField total_bare;
    total_bare.parts = {incident.get(), &bare};

    nlohmann::json report;
    report["boundary_residual_bare"] = bare.boundary_residual();

    std::map<std::string, const fields::Field*> available = {
        {"incident", incident.get()},
        {"scattered_bare", &bare},
        {"total_bare", &total_bare}};

    std::optional<CloakPipeline> pipe;
    std::optional<multipole::DeviceField> device;
    std::optional<scatter::ScatteredField> cloaked;
    SumField cloaked_incident, total_scene;
    if (config.method != MethodKind::None) {
      pipe = build_cloak(config, config.method, ctx, *incident);
      device.emplace(pipe->solution);
      cloaked_incident.parts = {incident.get(), &*device};
      cloaked.emplace(scatter::solve_scattering(obstacle, cloaked_incident, ctx, config.n_src,
                                                config.src_shrink, config.exec));
      total_scene.parts = {incident.get(), &*device, &*cloaked};
      available["device"] = &*device;
      available["scattered"] = &*cloaked;
      available["total_scene"] = &total_scene;
      report["boundary_residual_cloaked"] = cloaked->boundary_residual();
      report["suppression"] = scatter::scattering_suppression(
          obstacle, *incident, pipe->solution, 2.0 * config.delta, config.n_src,
          config.src_shrink, 256, config.exec);
      emit.coefficients(pipe->solution);
    }
    emit.grids(available, "scatter");
    emit.json_file(report, "scatter_report.json");
    emit.manifest();
    return;
  }

  throw invalid_argument_error("unknown command '" + command + "'");
}

void run_sweep(const ScenarioConfig& config, const std::filesystem::path& out_dir) {
  if (config.sweep_methods.empty() || config.sweep_multipliers.empty())
    fail("sweep", "sweep needs methods and m_multipliers");
  WaveContext ctx(config.k);
  auto incident = make_incident(config, ctx);
  Emitter emit(config, out_dir);

  std::string log;
  int cell = 0;
  for (double dl : config.sweep_delta_lambdas) {
    for (const auto& method : config.sweep_methods) {
      for (int mult : config.sweep_multipliers) {
        nlohmann::json rec;
        rec["cell"] = cell;
        rec["delta_lambda"] = dl;
        rec["method"] = method;
        rec["m_multiplier"] = mult;
        try {
          ScenarioConfig cell_cfg = config;
          cell_cfg.delta = dl * ctx.wavelength();
          cell_cfg.sigma = cell_cfg.delta / 2.0;
          cell_cfg.n_nodes = 0;
          cell_cfg.M = 0;
          cell_cfg.m_multiplier = mult;
          MethodKind kind = method == "green" ? MethodKind::Green : MethodKind::Svd;
          CloakPipeline pipe = build_cloak(cell_cfg, kind, ctx, *incident);
          auto reports = make_reports(cell_cfg, *incident, pipe, kind);
          rec["M"] = pipe.M;
          rec["delta"] = cell_cfg.delta;
          rec["interior_error"] = reports.front().interior_error;
          rec["radiation_error"] = reports.front().radiation_error;
          if (!cell_cfg.betas.empty() && pipe.layout.n_dev() == 3) {
            nlohmann::json radii;
            for (const auto& r : reports)
              if (r.beta && r.device_radius_over_delta)
                radii[io::format_double(*r.beta)] = *r.device_radius_over_delta;
            rec["device_radius_over_delta"] = radii;
          }
        } catch (const std::exception& e) {
          rec["error"] = e.what();
        }
        log += rec.dump() + "\n";
        ++cell;
      }
    }
  }
  emit.raw_file(log, "results.jsonl");
  emit.manifest();
}

}  // namespace cloak::scenario
