#include "dgpwnn/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace dgpwnn {

AdamState AdamState::for_directions(const DirectionSet& dirs, double lr0_) {
  AdamState s;
  s.m = Eigen::MatrixXd::Zero(dirs.angles_per_element(), dirs.n_elements);
  s.v = Eigen::MatrixXd::Zero(dirs.angles_per_element(), dirs.n_elements);
  s.lr0 = lr0_;
  return s;
}

void adam_step(AdamState& state, DirectionSet& dirs, const Eigen::MatrixXd& gradient, bool ascend) {
  if (gradient.rows() != state.m.rows() || gradient.cols() != state.m.cols())
    throw InvalidConfig("adam_step: gradient shape mismatch");
  state.step += 1;
  const double k = static_cast<double>(state.step);
  const double lr = state.lr0 / std::sqrt(k);
  state.m = state.beta1 * state.m + (1.0 - state.beta1) * gradient;
  state.v = state.beta2 * state.v + (1.0 - state.beta2) * gradient.cwiseProduct(gradient);
  const double bc1 = 1.0 - std::pow(state.beta1, k);
  const double bc2 = 1.0 - std::pow(state.beta2, k);
  const double sign = ascend ? 1.0 : -1.0;

  Eigen::MatrixXd update =
      (state.m / bc1).cwiseQuotient(((state.v / bc2).cwiseSqrt().array() + state.eps).matrix());
  dirs.angles += sign * lr * update;

  // Range enforcement: headings/azimuths wrap, polar angles clamp.
  const Index wrap_rows = dirs.dim == 2 ? dirs.n_dirs : dirs.t_star;
  for (Index k_el = 0; k_el < dirs.n_elements; ++k_el) {
    for (Index r = 0; r < wrap_rows; ++r) dirs.angles(r, k_el) = wrap_angle(dirs.angles(r, k_el));
    for (Index r = wrap_rows; r < dirs.angles_per_element(); ++r)
      dirs.angles(r, k_el) = std::clamp(dirs.angles(r, k_el), 0.0, std::numbers::pi);
  }
}

EtaGradient grad_eta(const FormsBase& forms, const TraceTable& xi, const PWExpansion& v,
                     const TraceTable& v_traces, std::mt19937* shuffle) {
  const Mesh& mesh = forms.mesh();
  const DirectionSet& dirs = v.directions;
  const Index ape = dirs.angles_per_element();

  EtaGradient out;
  const double nrm2 = form_dot(v_traces, v_traces).real();
  out.norm = std::sqrt(std::max(0.0, nrm2));
  if (out.norm <= kNormFloor) throw DegenerateCandidate("grad_eta: candidate norm below floor");
  out.residual_value = form_dot(xi, v_traces).real();
  out.eta = out.residual_value / out.norm;

  std::vector<Eigen::MatrixXcd> dblocks;
  dblocks.reserve(static_cast<size_t>(mesh.n_faces()));
  for (Index f = 0; f < mesh.n_faces(); ++f)
    dblocks.push_back(forms.angle_derivative_block(f, v));

  // Flat (face, node) visit order; optionally shuffled per call.
  std::vector<std::pair<Index, Index>> visits;
  for (Index f = 0; f < mesh.n_faces(); ++f)
    for (Index q = 0; q < forms.face_rule(f).size(); ++q) visits.emplace_back(f, q);
  if (shuffle) std::shuffle(visits.begin(), visits.end(), *shuffle);

  Eigen::MatrixXd grad_r = Eigen::MatrixXd::Zero(ape, dirs.n_elements);
  Eigen::MatrixXd grad_n = Eigen::MatrixXd::Zero(ape, dirs.n_elements);
  for (const auto& [f, q] : visits) {
    const Face& face = mesh.faces[static_cast<size_t>(f)];
    const Index rows = forms.face_rows(f);
    const Eigen::MatrixXcd& D = dblocks[static_cast<size_t>(f)];
    const auto xi_seg = xi.face[static_cast<size_t>(f)].segment(rows * q, rows);
    const auto v_seg = v_traces.face[static_cast<size_t>(f)].segment(rows * q, rows);
    const int owners = face.is_interior() ? 2 : 1;
    for (int o = 0; o < owners; ++o) {
      const Index el = o == 0 ? face.owner : face.neighbor;
      for (Index p = 0; p < ape; ++p) {
        const auto d_seg = D.col(o * ape + p).segment(rows * q, rows);
        grad_r(p, el) += d_seg.dot(xi_seg).real();  // sum xi * conj(dv)
        grad_n(p, el) += d_seg.dot(v_seg).real();   // sum v  * conj(dv)
      }
    }
  }

  const double n3 = out.norm * out.norm * out.norm;
  out.grad = grad_r / out.norm - (out.residual_value / n3) * grad_n;
  return out;
}

AugmentResult augment_basis(const FormsBase& forms, const TraceTable& u_prev, Index width,
                            const TrainConfig& config, std::mt19937& rng) {
  if (width < 1) throw InvalidConfig("augment_basis: width must be >= 1");
  if (config.max_epochs < 1) throw InvalidConfig("augment_basis: max_epochs must be >= 1");
  const Mesh& mesh = forms.mesh();

  auto [dirs, clamped] = init_directions(mesh.dim, width, mesh.n_elements());
  const TraceTable xi = xi_traces(forms, u_prev);

  auto blocks = build_basis_blocks(forms, dirs);
  LsqSystem sys = assemble_from_blocks(forms, blocks, xi, dirs.n_dirs);
  RegularizedSolution sol = solve_regularized(sys);
  const Index dofs = sys.dofs_per_element;

  auto coeffs_of = [&](const Eigen::VectorXcd& c) {
    Eigen::MatrixXcd m(dofs, mesh.n_elements());
    for (Index k = 0; k < mesh.n_elements(); ++k) m.col(k) = c.segment(k * dofs, dofs);
    return m;
  };
  PWExpansion cand = forms.make_expansion(dirs, coeffs_of(sol.c));
  TraceTable cand_traces = traces_from_blocks(forms, blocks, sol.c, dofs);

  AugmentResult result;
  result.init_clamped = clamped;
  AdamState adam = AdamState::for_directions(dirs, config.lr0);

  auto loss_of = [&](const TraceTable& vt) {
    TraceTable total = u_prev;
    total.add_scaled(vt, Complex(1.0, 0.0));
    return loss_j(forms, total);
  };

  for (int epoch = 0;; ++epoch) {
    const EtaGradient g = grad_eta(forms, xi, cand, cand_traces, &rng);
    const double ginf = g.grad.cwiseAbs().maxCoeff();
    result.trace.push_back({epoch, g.eta, ginf, loss_of(cand_traces)});
    result.epochs_used = epoch;
    if (ginf < config.grad_tol || epoch >= config.max_epochs) break;

    adam_step(adam, dirs, g.grad, /*ascend=*/true);
    if (mesh.dim == 3) {
      const Index t_star = dirs.t_star;
      for (Index k = 0; k < dirs.n_elements; ++k)
        correct_polar_angles(dirs.angles.col(k).segment(t_star, dirs.m_star), kPolarThreshold,
                             kPolarDisturbance);
    }

    blocks = build_basis_blocks(forms, dirs);
    sys = assemble_from_blocks(forms, blocks, xi, dirs.n_dirs);
    sol = solve_regularized(sys);
    cand = forms.make_expansion(dirs, coeffs_of(sol.c));
    cand_traces = traces_from_blocks(forms, blocks, sol.c, dofs);
  }

  const double nrm = energy_norm(cand_traces);
  if (nrm <= kNormFloor)
    throw DegenerateCandidate("augment_basis: trained candidate has vanishing energy norm");

  BasisFunction phi;
  phi.expansion = cand;
  phi.expansion.coeffs /= nrm;
  phi.traces = cand_traces;
  for (auto& fv : phi.traces.face) fv /= nrm;
  phi.volume.resize(static_cast<size_t>(mesh.n_elements()));
  for (Index k = 0; k < mesh.n_elements(); ++k)
    phi.volume[static_cast<size_t>(k)] =
        forms.element_volume_matrix(k, phi.expansion) * phi.expansion.coeffs.col(k);
  phi.l2_norm = forms.expansion_l2_norm(phi.expansion);

  result.eta_value = form_dot(xi, phi.traces).real();
  result.basis = std::move(phi);
  return result;
}

}  // namespace dgpwnn
