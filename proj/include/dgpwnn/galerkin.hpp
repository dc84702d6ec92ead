#ifndef DGPWNN_GALERKIN_HPP
#define DGPWNN_GALERKIN_HPP

#include <string>
#include <vector>

#include "dgpwnn/problems.hpp"
#include "dgpwnn/trainer.hpp"

namespace dgpwnn {

/// Per-iteration network width plan.
struct WidthSchedule {
  enum class Kind {
    fixed,        // width constant
    arithmetic2,  // 2D: n_i = start + 2(i-1), odd growth
    polar_grow    // 3D: m*_i = start + (i-1), so n_i = 2 m*_i^2
  };

  Kind kind = Kind::fixed;
  Index start = 1;

  Index width_at(int iteration) const;  // 1-based
};

/// Ordered basis with its Gram system and the current projection.
struct GalerkinState {
  std::vector<BasisFunction> basis;
  Eigen::MatrixXcd K;       // K(r,c) = a(phi_c, phi_r), Hermitian, unit diagonal
  Eigen::VectorXcd F;       // L(phi_r)
  Eigen::VectorXcd coeffs;  // current Galerkin solution
  TraceTable u_traces;
  std::vector<Eigen::VectorXcd> u_volume;

  Index size() const { return static_cast<Index>(basis.size()); }
};

/// Appends phi and extends K and F.
void append_basis(GalerkinState& state, const FormsBase& forms, BasisFunction phi);

/// Solves K coeffs = F and refreshes the cached solution traces/values.
/// Throws DegenerateSystem when K is numerically singular.
void dg_solve(GalerkinState& state, const FormsBase& forms);

/// Ratio of extreme eigenvalues of a Hermitian positive definite matrix.
double condition_number(const Eigen::MatrixXcd& K);

/// eta * ||phi||_L2: computable stand-in for the L2 error.
double l2_indicator(double eta_value, const BasisFunction& phi);

enum class TerminalStatus { converged, max_iter, stalled };
const char* to_string(TerminalStatus s);

struct IterationRow {
  int iteration = 0;   // 1-based outer index
  Index width = 0;     // neurons per element for this iteration's network
  double eta = 0.0;    // eta(u_{i-1}, phi_i)
  double cond = 0.0;   // cond(K) over the kept basis (phi_1..phi_i, or
                       // phi_1..phi_{i-1} when this row's candidate is
                       // discarded by the tolerance/stall exit)
  double err_l2 = 0.0;      // ||u_ex - u_{i-1}||_L2
  double err_energy = 0.0;  // |||u_ex - u_{i-1}|||
  double l2_indicator = 0.0;
  int epochs = 0;
};

struct RunReport {
  std::vector<IterationRow> rows;
  std::vector<std::vector<EpochRecord>> epoch_traces;  // per outer iteration
  TerminalStatus status = TerminalStatus::max_iter;
  double final_err_l2 = 0.0;
  double final_err_energy = 0.0;
  double exact_l2_norm = 0.0;
  double exact_energy_norm = 0.0;
  double final_eta = 0.0;
  double initial_eta = 0.0;
  int quad_order = 0;
  std::vector<std::string> notes;

  double final_rel_l2() const { return exact_l2_norm > 0.0 ? final_err_l2 / exact_l2_norm : 0.0; }
};

struct RunSetup {
  const FormsBase* forms = nullptr;
  const BenchmarkProblem* problem = nullptr;
  WidthSchedule schedule;
  double tol = 1e-6;
  int max_outer = 20;
  TrainConfig train;
  bool dump_systems = false;
  std::string dump_prefix;
};

/// Outer loop: augment, record, stop on eta <= tol / stall / cap, else solve
/// the Gram system and continue.
RunReport run(const RunSetup& setup);

}  // namespace dgpwnn

#endif
