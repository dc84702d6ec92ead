#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "dgpwnn/runspec.hpp"

namespace {

void apply_overrides(dgpwnn::RunSpec& spec, const std::string& out, std::optional<unsigned int> seed,
                     std::optional<int> quad_order, bool dump_system) {
  if (!out.empty()) spec.out_prefix = out;
  if (seed) spec.seed = *seed;
  if (quad_order) spec.quad_order = *quad_order;
  spec.dump_system = spec.dump_system || dump_system;
}

int run_and_report(dgpwnn::RunSpec spec) {
  const dgpwnn::RunReport report = dgpwnn::execute(spec);
  std::cout << dgpwnn::summary_text(report, spec);
  if (!spec.out_prefix.empty())
    std::cout << "wrote " << spec.out_prefix << ".csv, " << spec.out_prefix << "_epochs.csv, "
              << spec.out_prefix << "_summary.txt\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive plane-wave discontinuous Galerkin solver for time-harmonic waves"};
  app.require_subcommand(1);

  std::string spec_path, preset_name, out_prefix;
  std::optional<unsigned int> seed;
  std::optional<int> quad_order;
  bool dump_system = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_prefix, "output path prefix for CSV/summary files");
    cmd->add_option("--seed", seed, "seed override for the training shuffle");
    cmd->add_option("--quad-order", quad_order, "fixed quadrature order override (points per direction)")
        ->check(CLI::Range(1, 64));
    cmd->add_flag("--dump-system", dump_system,
                  "dump the per-iteration least-squares system (A, b) as text");
  };

  CLI::App* run_cmd = app.add_subcommand("run", "execute a run described by a JSON spec file");
  run_cmd->add_option("--spec", spec_path, "path to the spec document")->required();
  add_common(run_cmd);

  CLI::App* preset_cmd = app.add_subcommand("preset", "execute a named benchmark preset");
  preset_cmd->add_option("name", preset_name, "preset name")->required();
  add_common(preset_cmd);

  app.add_subcommand("presets", "list available presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("presets")) {
      for (const auto& name : dgpwnn::preset_names()) std::cout << name << "\n";
      return 0;
    }
    if (app.got_subcommand("run")) {
      std::ifstream in(spec_path);
      if (!in) {
        std::cerr << "error: cannot open spec file " << spec_path << "\n";
        return 1;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      dgpwnn::RunSpec spec = dgpwnn::parse_spec(buf.str());
      apply_overrides(spec, out_prefix, seed, quad_order, dump_system);
      return run_and_report(std::move(spec));
    }
    dgpwnn::RunSpec spec = dgpwnn::preset_spec(preset_name);
    apply_overrides(spec, out_prefix, seed, quad_order, dump_system);
    return run_and_report(std::move(spec));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
