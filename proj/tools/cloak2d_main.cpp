#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cloak/io.hpp"
#include "cloak/scenario.hpp"
#include "cloak/types.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::string out = "out";
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "scenario config file (JSON)")->required();
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--override", args.overrides, "config override key=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2D frequency-domain active exterior cloaking simulations"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string command;
  for (const char* name :
       {"interior", "cloak-green", "cloak-svd", "illusion", "scatter", "metrics", "sweep"}) {
    CLI::App* cmd = app.add_subcommand(name, "");
    add_common(cmd, args);
    cmd->callback([&command, name] { command = name; });
  }

  std::string render_input, render_out;
  double render_clip = 1.0;
  CLI::App* render = app.add_subcommand("render", "field grid -> PPM heatmap");
  render->add_option("--input", render_input, "field grid file (expects a .meta.json sidecar)")
      ->required();
  render->add_option("--out", render_out, "output PPM file")->required();
  render->add_option("--clip", render_clip, "Re(u) color range is [-clip, clip]");
  render->callback([&command] { command = "render"; });

  CLI11_PARSE(app, argc, argv);

  try {
    if (command == "render") {
      std::string meta = render_input;
      auto pos = meta.rfind(".grid.txt");
      if (pos != std::string::npos) meta = meta.substr(0, pos);
      meta += ".meta.json";
      auto [nx, ny] = cloak::io::read_grid_resolution(meta);
      cloak::fields::FieldGrid grid = cloak::io::read_field_grid(render_input, nx, ny);
      cloak::io::write_ppm(render_out, grid, render_clip);
      return 0;
    }
    cloak::scenario::ScenarioConfig config =
        cloak::scenario::load_config(args.config, args.overrides);
    if (command == "sweep")
      cloak::scenario::run_sweep(config, args.out);
    else
      cloak::scenario::run_scenario(config, command, args.out);
    return 0;
  } catch (const cloak::invalid_argument_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}
