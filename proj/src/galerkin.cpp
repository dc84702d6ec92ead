#include "dgpwnn/galerkin.hpp"

#include <cmath>

namespace dgpwnn {

Index WidthSchedule::width_at(int iteration) const {
  switch (kind) {
    case Kind::fixed:
      return start;
    case Kind::arithmetic2:
      return start + 2 * static_cast<Index>(iteration - 1);
    case Kind::polar_grow:
      return start + static_cast<Index>(iteration - 1);
  }
  return start;
}

void append_basis(GalerkinState& state, const FormsBase& forms, BasisFunction phi) {
  const Index i = state.size();
  Eigen::MatrixXcd K(i + 1, i + 1);
  Eigen::VectorXcd F(i + 1);
  if (i > 0) {
    K.topLeftCorner(i, i) = state.K;
    F.head(i) = state.F;
  }
  for (Index r = 0; r < i; ++r) {
    // K(r,c) = a(phi_c, phi_r)
    K(r, i) = form_dot(phi.traces, state.basis[static_cast<size_t>(r)].traces);
    K(i, r) = std::conj(K(r, i));
  }
  K(i, i) = form_dot(phi.traces, phi.traces);
  F(i) = form_dot(forms.g_traces(), phi.traces);
  state.K = std::move(K);
  state.F = std::move(F);
  state.basis.push_back(std::move(phi));
}

void dg_solve(GalerkinState& state, const FormsBase& forms) {
  if (state.size() == 0) throw InvalidConfig("dg_solve: empty basis");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(state.K);
  if (es.info() != Eigen::Success || es.eigenvalues().minCoeff() <= 0.0)
    throw DegenerateSystem("dg_solve: Gram matrix is numerically singular (duplicate basis function?)");
  state.coeffs = es.eigenvectors() *
                 (es.eigenvectors().adjoint() * state.F).cwiseQuotient(
                     es.eigenvalues().cast<Complex>());

  state.u_traces = forms.zero_traces();
  const Mesh& mesh = forms.mesh();
  state.u_volume.assign(static_cast<size_t>(mesh.n_elements()), Eigen::VectorXcd());
  for (Index k = 0; k < mesh.n_elements(); ++k) {
    const int comps = forms.components();
    state.u_volume[static_cast<size_t>(k)] =
        Eigen::VectorXcd::Zero(comps * forms.volume_rule(k).size());
  }
  for (Index j = 0; j < state.size(); ++j) {
    const BasisFunction& phi = state.basis[static_cast<size_t>(j)];
    state.u_traces.add_scaled(phi.traces, state.coeffs(j));
    for (Index k = 0; k < mesh.n_elements(); ++k)
      state.u_volume[static_cast<size_t>(k)] += state.coeffs(j) * phi.volume[static_cast<size_t>(k)];
  }
}

double condition_number(const Eigen::MatrixXcd& K) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(K, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw DegenerateSystem("condition_number: eigensolve failed");
  const double lo = es.eigenvalues().minCoeff();
  const double hi = es.eigenvalues().maxCoeff();
  if (!(lo > 0.0)) throw DegenerateSystem("condition_number: matrix is not positive definite");
  return hi / lo;
}

double l2_indicator(double eta_value, const BasisFunction& phi) { return eta_value * phi.l2_norm; }

const char* to_string(TerminalStatus s) {
  switch (s) {
    case TerminalStatus::converged:
      return "converged";
    case TerminalStatus::max_iter:
      return "max_iter";
    case TerminalStatus::stalled:
      return "stalled";
  }
  return "unknown";
}

RunReport run(const RunSetup& setup) {
  const FormsBase& forms = *setup.forms;
  RunReport report;
  report.quad_order = forms.quad_order_used();
  const ExactSamples exact = sample_exact(forms, *setup.problem);
  report.exact_l2_norm = exact.l2_norm;
  report.exact_energy_norm = exact.energy_norm;

  GalerkinState state;
  state.u_traces = forms.zero_traces();
  state.u_volume.resize(static_cast<size_t>(forms.mesh().n_elements()));
  for (Index k = 0; k < forms.mesh().n_elements(); ++k)
    state.u_volume[static_cast<size_t>(k)] =
        Eigen::VectorXcd::Zero(forms.components() * forms.volume_rule(k).size());

  std::mt19937 rng(setup.train.seed);
  auto [err_l2, err_energy] = error_norms(forms, exact, state.u_traces, state.u_volume);
  report.final_err_l2 = err_l2;
  report.final_err_energy = err_energy;

  double prev_eta = 0.0;
  for (int i = 1;; ++i) {
    const Index width = setup.schedule.width_at(i);
    // Neurons per element: n directions in 2D, 2 m*^2 in 3D (doubled again
    // for the two Maxwell polarizations inside dofs_per_element).
    const Index n_dirs = forms.mesh().dim == 3 ? 2 * width * width : width;
    AugmentResult aug;
    try {
      aug = augment_basis(forms, state.u_traces, width, setup.train, rng);
    } catch (const DegenerateCandidate&) {
      // Remaining error projects to zero: current solution is optimal here.
      report.rows.push_back({i, forms.dofs_per_element(n_dirs), 0.0,
                             state.size() > 0 ? condition_number(state.K) : 1.0, err_l2, err_energy,
                             0.0, 0});
      report.epoch_traces.emplace_back();
      report.status = TerminalStatus::converged;
      report.final_eta = 0.0;
      if (i == 1) report.initial_eta = 0.0;
      report.notes.push_back("iteration " + std::to_string(i) + ": candidate degenerate, converged");
      break;
    }
    if (aug.init_clamped && i == 1)
      report.notes.push_back("polar init angle clamped to [0,pi] (top of range)");

    IterationRow row;
    row.iteration = i;
    row.width = forms.dofs_per_element(n_dirs);
    row.eta = aug.eta_value;
    row.err_l2 = err_l2;
    row.err_energy = err_energy;
    row.l2_indicator = l2_indicator(aug.eta_value, aug.basis);
    row.epochs = aug.epochs_used;
    if (i == 1) report.initial_eta = aug.eta_value;
    report.final_eta = aug.eta_value;

    if (setup.dump_systems) {
      const TraceTable xi = xi_traces(forms, state.u_traces);
      const LsqSystem sys = assemble_system(forms, aug.basis.expansion.directions, xi);
      const std::string stem = setup.dump_prefix + "_system_iter" + std::to_string(i);
      dump_matrix(sys.A, stem + "_A.txt");
      dump_vector(sys.b, stem + "_b.txt");
    }

    // A candidate whose estimator is already below tol (or that signals a
    // stall) is discarded: the returned solution stays u_{i-1} and the
    // recorded cond is that of the basis actually kept.
    if (aug.eta_value <= setup.tol || (i > 1 && aug.eta_value > 10.0 * prev_eta)) {
      row.cond = state.size() > 0 ? condition_number(state.K) : 1.0;
      report.rows.push_back(row);
      report.epoch_traces.push_back(std::move(aug.trace));
      if (aug.eta_value <= setup.tol) {
        report.status = TerminalStatus::converged;
      } else {
        report.status = TerminalStatus::stalled;
        report.notes.push_back("iteration " + std::to_string(i) +
                               ": estimator grew more than tenfold, flagged as stalled");
      }
      break;
    }
    prev_eta = aug.eta_value;

    append_basis(state, forms, std::move(aug.basis));
    row.cond = condition_number(state.K);
    report.rows.push_back(row);
    report.epoch_traces.push_back(std::move(aug.trace));

    dg_solve(state, forms);
    std::tie(err_l2, err_energy) = error_norms(forms, exact, state.u_traces, state.u_volume);
    report.final_err_l2 = err_l2;
    report.final_err_energy = err_energy;

    if (i >= setup.max_outer) {
      report.status = TerminalStatus::max_iter;
      break;
    }
  }
  return report;
}

}  // namespace dgpwnn
