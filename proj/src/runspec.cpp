#include "dgpwnn/runspec.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dgpwnn {

namespace {

constexpr double kPi = std::numbers::pi;

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw InvalidConfig("spec field '" + field + "': " + what);
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) field_error(key, "expected a number");
  return j[key].get<double>();
}

Index get_int(const json& j, const std::string& key, Index fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number_integer()) field_error(key, "expected an integer");
  return j[key].get<Index>();
}

std::string get_string(const json& j, const std::string& key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_string()) field_error(key, "expected a string");
  return j[key].get<std::string>();
}

Vec get_vec(const json& j, const std::string& key, const Vec& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_array() || j[key].size() != 3) field_error(key, "expected an array of 3 numbers");
  return Vec(j[key][0].get<double>(), j[key][1].get<double>(), j[key][2].get<double>());
}

const std::set<std::string> kKnownKeys = {
    "problem",    "omega",        "divisions",       "schedule",        "n1",
    "m1",         "tol",          "max_outer",       "alpha",           "beta",
    "rho1",       "rho2",         "varsigma",        "mu",              "eps_re",
    "eps_im",     "mode_k",       "source",          "dipole_location", "dipole_moment",
    "current",    "direction_d",  "direction_zeta",  "direction_theta", "amplitude_re",
    "amplitude_im", "grad_tol",   "max_epochs",      "lr0",             "seed",
    "quad_order", "dump_system",  "out",             "dim"};

int problem_dim(const RunSpec& spec) {
  if (spec.problem == "waveguide2d") return 2;
  if (spec.problem == "point_source_3d" || spec.problem == "maxwell_dipole") return 3;
  return 0;  // manufactured: taken from the spec's dim key
}

}  // namespace

RunSpec parse_spec(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidConfig(std::string("spec: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidConfig("spec: document must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKnownKeys.count(key)) field_error(key, "unknown key");

  RunSpec spec;
  if (!j.contains("problem")) field_error("problem", "required");
  spec.problem = get_string(j, "problem", "");
  const std::set<std::string> kinds = {"waveguide2d", "point_source_3d", "maxwell_dipole",
                                       "manufactured_plane_wave"};
  if (!kinds.count(spec.problem))
    field_error("problem", "must be one of waveguide2d, point_source_3d, maxwell_dipole, "
                           "manufactured_plane_wave");

  spec.omega = get_number(j, "omega", 2.0 * kPi);
  if (!(spec.omega > 0.0)) field_error("omega", "must be positive");

  int dim = problem_dim(spec);
  if (dim == 0) {
    dim = static_cast<int>(get_int(j, "dim", 2));
    if (dim != 2 && dim != 3) field_error("dim", "must be 2 or 3");
  } else if (j.contains("dim") && get_int(j, "dim", dim) != dim) {
    field_error("dim", "inconsistent with the chosen problem");
  }
  spec.dim = dim;

  // Desk-scale frequency caps.
  const double cap = dim == 2 ? 8.0 * kPi : 2.0 * kPi;
  if (spec.omega > cap + 1e-12)
    field_error("omega", dim == 2 ? "exceeds the 2D cap of 8*pi" : "exceeds the 3D cap of 2*pi");

  if (j.contains("divisions")) {
    const auto& d = j["divisions"];
    if (d.is_number_integer()) {
      const Index v = d.get<Index>();
      spec.divisions = {v, v, v};
    } else if (d.is_array() && (d.size() == static_cast<size_t>(dim))) {
      for (size_t a = 0; a < d.size(); ++a) {
        if (!d[a].is_number_integer()) field_error("divisions", "entries must be integers");
        spec.divisions[a] = d[a].get<Index>();
      }
    } else {
      field_error("divisions", "expected an integer or an array with one entry per axis");
    }
  }
  for (int a = 0; a < dim; ++a)
    if (spec.divisions[static_cast<size_t>(a)] < 1) field_error("divisions", "must be >= 1 per axis");

  spec.schedule = get_string(j, "schedule", "grow");
  if (spec.schedule != "grow" && spec.schedule != "fixed")
    field_error("schedule", "must be 'grow' or 'fixed'");
  if (j.contains("n1")) spec.n1 = get_int(j, "n1", 0);
  if (j.contains("m1")) spec.m1 = get_int(j, "m1", 0);
  if (spec.n1 && *spec.n1 < 1) field_error("n1", "must be >= 1");
  if (spec.m1 && *spec.m1 < 2) field_error("m1", "must be >= 2");

  spec.tol = get_number(j, "tol", 1e-6);
  if (!(spec.tol > 0.0)) field_error("tol", "must be positive");
  spec.max_outer = static_cast<int>(get_int(j, "max_outer", 20));
  if (spec.max_outer < 1) field_error("max_outer", "must be >= 1");

  if (j.contains("alpha")) {
    spec.alpha = get_number(j, "alpha", 0.0);
    if (*spec.alpha < 0.0) field_error("alpha", "must be nonnegative");
  }
  spec.beta = get_number(j, "beta", 1.0);
  if (spec.beta < 0.0) field_error("beta", "must be nonnegative");
  spec.rho1 = get_number(j, "rho1", 1.0);
  spec.rho2 = get_number(j, "rho2", 1.0);
  if (spec.rho1 < 0.0) field_error("rho1", "must be nonnegative");
  if (spec.rho2 < 0.0) field_error("rho2", "must be nonnegative");
  spec.varsigma = get_number(j, "varsigma", 1.0);
  if (!(spec.varsigma > 0.0)) field_error("varsigma", "must be positive");
  spec.mu = get_number(j, "mu", 1.0);
  if (!(spec.mu > 0.0)) field_error("mu", "must be positive");
  spec.eps = Complex(get_number(j, "eps_re", 1.0), get_number(j, "eps_im", 1.0));

  spec.mode_k = static_cast<int>(get_int(j, "mode_k", -1));
  spec.source = get_vec(j, "source", Vec(-1.0, -1.0, -1.0));
  spec.dipole_location = get_vec(j, "dipole_location", Vec(0.6, 0.6, 0.6));
  spec.dipole_moment = get_vec(j, "dipole_moment", Vec(0.0, 0.0, 1.0));
  spec.current = get_number(j, "current", 1.0);

  spec.direction_d = get_number(j, "direction_d", 0.0);
  spec.direction_zeta = get_number(j, "direction_zeta", 1.0);
  spec.direction_theta = get_number(j, "direction_theta", 0.5);
  spec.amplitude = Complex(get_number(j, "amplitude_re", 1.0), get_number(j, "amplitude_im", 0.0));

  spec.grad_tol = get_number(j, "grad_tol", 1e-6);
  if (!(spec.grad_tol > 0.0)) field_error("grad_tol", "must be positive");
  spec.max_epochs = static_cast<int>(get_int(j, "max_epochs", 500));
  if (spec.max_epochs < 1) field_error("max_epochs", "must be >= 1");
  spec.lr0 = get_number(j, "lr0", 0.01);
  if (!(spec.lr0 > 0.0)) field_error("lr0", "must be positive");
  spec.seed = static_cast<unsigned int>(get_int(j, "seed", 0));

  if (j.contains("quad_order")) {
    const Index q = get_int(j, "quad_order", 0);
    if (q < 1 || q > 64) field_error("quad_order", "must be in [1,64]");
    spec.quad_order = static_cast<int>(q);
  }
  if (j.contains("dump_system")) {
    if (!j["dump_system"].is_boolean()) field_error("dump_system", "expected a boolean");
    spec.dump_system = j["dump_system"].get<bool>();
  }
  spec.out_prefix = get_string(j, "out", "");
  return spec;
}

std::vector<std::string> preset_names() {
  return {"waveguide-fixed-width", "waveguide-growing-width", "waveguide-multidomain",
          "helmholtz3d-point", "maxwell-dipole"};
}

RunSpec preset_spec(const std::string& name) {
  // Desk-scale epoch caps: the per-epoch coefficient re-solve dominates the
  // runtime, and the width schedules carry most of the convergence.
  json j;
  if (name == "waveguide-fixed-width") {
    j = {{"problem", "waveguide2d"}, {"omega", 2.0 * kPi}, {"divisions", 1},
         {"schedule", "fixed"},      {"n1", 14},           {"max_outer", 12},
         {"max_epochs", 30}};
  } else if (name == "waveguide-growing-width") {
    j = {{"problem", "waveguide2d"}, {"omega", 2.0 * kPi}, {"divisions", 1},
         {"schedule", "grow"},       {"n1", 3},            {"max_outer", 12},
         {"max_epochs", 30}};
  } else if (name == "waveguide-multidomain") {
    j = {{"problem", "waveguide2d"}, {"omega", 4.0 * kPi}, {"divisions", 4},
         {"schedule", "grow"},       {"n1", 7},            {"max_outer", 10},
         {"max_epochs", 150}};
  } else if (name == "helmholtz3d-point") {
    j = {{"problem", "point_source_3d"}, {"omega", kPi}, {"divisions", 1},
         {"schedule", "grow"},           {"m1", 4},      {"max_outer", 5},
         {"max_epochs", 100}};
  } else if (name == "maxwell-dipole") {
    j = {{"problem", "maxwell_dipole"}, {"omega", kPi},    {"divisions", 2},
         {"schedule", "grow"},          {"m1", 3},         {"max_outer", 5},
         {"max_epochs", 60},            {"grad_tol", 1e-4}, {"lr0", 0.05}};
  } else {
    std::string msg = "unknown preset '" + name + "'; available:";
    for (const auto& p : preset_names()) msg += " " + p;
    throw InvalidConfig(msg);
  }
  return parse_spec(j.dump());
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12e", x);
  return buf;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidConfig("cannot open output file " + path);
  out << content;
}

}  // namespace

std::string report_csv(const RunReport& report) {
  std::ostringstream out;
  out << "iteration,width,eta,cond,err_l2,err_energy,l2_indicator,epochs\n";
  for (const auto& r : report.rows)
    out << r.iteration << "," << r.width << "," << fmt(r.eta) << "," << fmt(r.cond) << ","
        << fmt(r.err_l2) << "," << fmt(r.err_energy) << "," << fmt(r.l2_indicator) << ","
        << r.epochs << "\n";
  return out.str();
}

std::string epoch_csv(const RunReport& report) {
  std::ostringstream out;
  out << "iteration,epoch,eta,grad_inf,loss\n";
  for (size_t i = 0; i < report.epoch_traces.size(); ++i)
    for (const auto& e : report.epoch_traces[i])
      out << (i + 1) << "," << e.epoch << "," << fmt(e.eta) << "," << fmt(e.grad_inf) << ","
          << fmt(e.loss) << "\n";
  return out.str();
}

std::string summary_text(const RunReport& report, const RunSpec& spec) {
  std::ostringstream out;
  out << "problem: " << spec.problem << "  omega: " << fmt(spec.omega)
      << "  divisions: " << spec.divisions[0];
  out << "  schedule: " << spec.schedule << "\n";
  out << "status: " << to_string(report.status) << "  iterations: " << report.rows.size() << "\n";
  out << "final eta: " << fmt(report.final_eta) << "\n";
  out << "final errors: L2 " << fmt(report.final_err_l2) << " (rel "
      << fmt(report.exact_l2_norm > 0 ? report.final_err_l2 / report.exact_l2_norm : 0.0)
      << "), energy " << fmt(report.final_err_energy) << " (rel "
      << fmt(report.exact_energy_norm > 0 ? report.final_err_energy / report.exact_energy_norm : 0.0)
      << ")\n";
  out << "quadrature order: " << report.quad_order << "\n\n";

  out << "Condition number of the Galerkin matrix at each iteration j\n";
  char buf[32];
  out << "j           |";
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof(buf), " %6d", r.iteration);
    out << buf;
  }
  out << "\ncond(K^(j)) |";
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof(buf), " %6.2f", r.cond);
    out << buf;
  }
  out << "\n";
  for (const auto& note : report.notes) out << "note: " << note << "\n";
  return out.str();
}

RunReport execute(const RunSpec& spec) {
  const int dim = spec.dim;

  BenchmarkProblem problem;
  if (spec.problem == "waveguide2d") {
    const int k = spec.mode_k >= 0 ? spec.mode_k
                                   : static_cast<int>(std::lround(spec.omega / kPi)) - 1;
    problem = waveguide_exact_2d(spec.omega, k);
  } else if (spec.problem == "point_source_3d") {
    problem = point_source_3d(spec.omega, spec.source);
  } else if (spec.problem == "maxwell_dipole") {
    problem = maxwell_dipole(spec.omega, spec.eps, spec.mu, spec.dipole_location,
                             spec.dipole_moment, Complex(spec.current, 0.0), spec.varsigma);
  } else {
    const Vec W = dim == 2 ? direction_vector_2d(spec.direction_d)
                           : direction_vector_3d(spec.direction_zeta, spec.direction_theta);
    problem = manufactured_plane_wave(dim, spec.omega, W, spec.amplitude);
  }

  Mesh mesh = build_uniform_mesh(problem.domain, spec.divisions, problem.dim);

  std::unique_ptr<FormsBase> forms;
  if (problem.is_maxwell) {
    MaxwellParams mp;
    mp.omega = spec.omega;
    mp.mu = spec.mu;
    mp.eps = spec.eps;
    mp.varsigma = spec.varsigma;
    mp.rho1 = spec.rho1;
    mp.rho2 = spec.rho2;
    mp.g = problem.g_vector;
    forms = std::make_unique<MaxwellForms>(std::move(mesh), std::move(mp), spec.quad_order);
  } else {
    HelmholtzParams hp;
    hp.omega = spec.omega;
    hp.alpha = spec.alpha.value_or(spec.omega * spec.omega);
    hp.beta = spec.beta;
    hp.g = problem.g_scalar;
    forms = std::make_unique<HelmholtzForms>(std::move(mesh), std::move(hp), spec.quad_order);
  }

  RunSetup setup;
  setup.forms = forms.get();
  setup.problem = &problem;
  if (problem.dim == 2) {
    setup.schedule.kind =
        spec.schedule == "grow" ? WidthSchedule::Kind::arithmetic2 : WidthSchedule::Kind::fixed;
    setup.schedule.start = spec.n1.value_or(spec.schedule == "grow" ? 13 : 14);
  } else {
    setup.schedule.kind =
        spec.schedule == "grow" ? WidthSchedule::Kind::polar_grow : WidthSchedule::Kind::fixed;
    setup.schedule.start = spec.m1.value_or(4);
  }
  setup.tol = spec.tol;
  setup.max_outer = spec.max_outer;
  setup.train.max_epochs = spec.max_epochs;
  setup.train.grad_tol = spec.grad_tol;
  setup.train.lr0 = spec.lr0;
  setup.train.seed = spec.seed;
  setup.dump_systems = spec.dump_system && !spec.out_prefix.empty();
  setup.dump_prefix = spec.out_prefix;

  RunReport report = run(setup);

  if (!spec.out_prefix.empty()) {
    write_file(spec.out_prefix + ".csv", report_csv(report));
    write_file(spec.out_prefix + "_epochs.csv", epoch_csv(report));
    write_file(spec.out_prefix + "_summary.txt", summary_text(report, spec));
  }
  return report;
}

RunReport run_preset(const std::string& name, const std::string& out_prefix,
                     std::optional<unsigned int> seed, std::optional<int> quad_order,
                     bool dump_system) {
  RunSpec spec = preset_spec(name);
  spec.out_prefix = out_prefix;
  if (seed) spec.seed = *seed;
  if (quad_order) spec.quad_order = *quad_order;
  spec.dump_system = spec.dump_system || dump_system;
  return execute(spec);
}

}  // namespace dgpwnn
