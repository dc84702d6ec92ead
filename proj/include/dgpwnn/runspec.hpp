#ifndef DGPWNN_RUNSPEC_HPP
#define DGPWNN_RUNSPEC_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dgpwnn/galerkin.hpp"

namespace dgpwnn {

/// Flat, validated run description. Parsed from a JSON document with
/// top-level scalar keys only; see README for the schema.
struct RunSpec {
  std::string problem;  // waveguide2d | point_source_3d | maxwell_dipole | manufactured_plane_wave
  int dim = 2;          // fixed by the problem kind except for manufactured waves
  double omega = 2.0 * 3.14159265358979323846;
  std::array<Index, 3> divisions{1, 1, 1};

  // Schedule: "grow" (2D widths n1, n1+2, ...; 3D m* = m1, m1+1, ...) or "fixed".
  std::string schedule = "grow";
  std::optional<Index> n1;  // 2D width start / fixed width
  std::optional<Index> m1;  // 3D polar count start / fixed m*

  double tol = 1e-6;
  int max_outer = 20;

  std::optional<double> alpha;  // default omega^2
  double beta = 1.0;
  double rho1 = 1.0;
  double rho2 = 1.0;
  double varsigma = 1.0;
  double mu = 1.0;
  Complex eps{1.0, 1.0};

  int mode_k = -1;  // waveguide mode; default highest propagating omega/pi - 1
  Vec source = Vec(-1.0, -1.0, -1.0);        // point source location
  Vec dipole_location = Vec(0.6, 0.6, 0.6);  // dipole location
  Vec dipole_moment = Vec(0.0, 0.0, 1.0);
  double current = 1.0;

  // Manufactured plane wave: heading d (2D) or (zeta, theta) (3D).
  double direction_d = 0.0;
  double direction_zeta = 1.0;
  double direction_theta = 0.5;
  Complex amplitude{1.0, 0.0};

  double grad_tol = 1e-6;
  int max_epochs = 500;
  double lr0 = 0.01;
  unsigned int seed = 0;

  std::optional<int> quad_order;
  bool dump_system = false;
  std::string out_prefix;
};

/// Parses and validates a JSON spec document; schema violations carry the
/// offending field name.
RunSpec parse_spec(const std::string& json_text);

std::vector<std::string> preset_names();
RunSpec preset_spec(const std::string& name);

/// Builds mesh/problem/forms from the spec, runs the outer loop, and writes
/// the CSV report, epoch trace CSV, and summary table when out_prefix is
/// nonempty.
RunReport execute(const RunSpec& spec);

RunReport run_preset(const std::string& name, const std::string& out_prefix = "",
                     std::optional<unsigned int> seed = {},
                     std::optional<int> quad_order = {}, bool dump_system = false);

std::string report_csv(const RunReport& report);
std::string epoch_csv(const RunReport& report);
std::string summary_text(const RunReport& report, const RunSpec& spec);

}  // namespace dgpwnn

#endif
