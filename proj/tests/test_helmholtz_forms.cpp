#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dgpwnn/forms.hpp"
#include "dgpwnn/problems.hpp"

using namespace dgpwnn;

namespace {

constexpr double kPi = std::numbers::pi;

HelmholtzParams params_with_zero_g(double omega, double alpha, double beta) {
  HelmholtzParams p;
  p.omega = omega;
  p.alpha = alpha;
  p.beta = beta;
  p.g = [](const Vec&, const Vec&) { return Complex(0.0, 0.0); };
  return p;
}

// Random small expansion over a fresh direction set.
PWExpansion random_expansion(const HelmholtzForms& forms, Index n, std::mt19937& rng) {
  auto [dirs, clamped] = init_directions(forms.mesh().dim, n, forms.mesh().n_elements());
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (Index k = 0; k < dirs.n_elements; ++k)
    for (Index p = 0; p < dirs.angles_per_element(); ++p) dirs.angles(p, k) += 0.2 * u(rng);
  Eigen::MatrixXcd c(n, forms.mesh().n_elements());
  for (Index k = 0; k < c.cols(); ++k)
    for (Index j = 0; j < n; ++j) c(j, k) = Complex(u(rng), u(rng));
  return forms.make_expansion(std::move(dirs), std::move(c));
}

}  // namespace

TEST_CASE("single plane wave on the unit square: a(v,v) = 6 omega^2") {
  // (W.n + 1)^2 summed over the four unit edges with |v| = 1 gives 6.
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 1, 1);
  const double omega = kPi;
  const HelmholtzForms forms(mesh, params_with_zero_g(omega, omega * omega, 1.0));

  auto [dirs, _] = init_directions(2, 1, 1);
  dirs.angles(0, 0) = 0.0;  // W = (1, 0)
  Eigen::MatrixXcd c(1, 1);
  c(0, 0) = Complex(1.0, 0.0);
  const PWExpansion v = forms.make_expansion(dirs, c);

  const Complex avv = a_form(forms, v, v);
  CHECK(avv.real() == doctest::Approx(6.0 * omega * omega).epsilon(1e-12));
  CHECK(std::abs(avv.imag()) < 1e-12 * std::abs(avv.real()));
  CHECK(energy_norm(forms, v) == doctest::Approx(kPi * std::sqrt(6.0)).epsilon(1e-12));
}

TEST_CASE("zero function has zero form values") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  const HelmholtzForms forms(mesh, params_with_zero_g(kPi, kPi * kPi, 1.0));
  auto [dirs, _] = init_directions(2, 3, 4);
  const PWExpansion zero = forms.make_expansion(dirs, Eigen::MatrixXcd::Zero(3, 4));
  CHECK(std::abs(a_form(forms, zero, zero)) == 0.0);
  CHECK(energy_norm(forms, zero) == 0.0);
  CHECK(std::abs(l_form(forms, zero)) == 0.0);
}

TEST_CASE("hermitian symmetry, positivity, homogeneity, Cauchy-Schwarz") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  const double omega = 2.0 * kPi;
  const HelmholtzForms forms(mesh, params_with_zero_g(omega, omega * omega, 1.0));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const PWExpansion u = random_expansion(forms, 4, rng);
    const PWExpansion v = random_expansion(forms, 4, rng);
    const Complex auv = a_form(forms, u, v);
    const Complex avu = a_form(forms, v, u);
    CHECK(std::abs(auv - std::conj(avu)) < 1e-12 * std::abs(auv));

    const Complex avv = a_form(forms, v, v);
    CHECK(avv.real() >= 0.0);
    CHECK(std::abs(avv.imag()) <= 1e-12 * std::abs(avv));

    const double nu = energy_norm(forms, u);
    const double nv = energy_norm(forms, v);
    CHECK(std::abs(auv) <= nu * nv * (1.0 + 1e-10));

    // |||2v||| = 2 |||v|||
    PWExpansion v2 = v;
    v2.coeffs *= 2.0;
    CHECK(energy_norm(forms, v2) == doctest::Approx(2.0 * nv).epsilon(1e-12));
  }
}

TEST_CASE("l_form: zero datum, manufactured datum, quadrature self-consistency") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 1, 1);
  const double omega = kPi;
  std::mt19937 rng(3);

  // g == 0 -> L(v) = 0.
  const HelmholtzForms zero_forms(mesh, params_with_zero_g(omega, omega * omega, 1.0));
  const PWExpansion v0 = random_expansion(zero_forms, 3, rng);
  CHECK(std::abs(l_form(zero_forms, v0)) == 0.0);

  // g manufactured from v itself: L(v) equals the boundary part of a(v, v),
  // which on a single element is all of a(v, v).
  auto [dirs, _] = init_directions(2, 1, 1);
  dirs.angles(0, 0) = 0.4;
  Eigen::MatrixXcd c(1, 1);
  c(0, 0) = Complex(0.7, -0.3);
  HelmholtzParams manuf = params_with_zero_g(omega, omega * omega, 1.0);
  const Vec W = direction_vector_2d(0.4);
  manuf.g = [omega, W, c](const Vec& x, const Vec& n) {
    auto [val, grad] = eval_scalar_wave(omega, W, x);
    return c(0, 0) * (n.cast<Complex>().dot(grad) + kImag * omega * val);
  };
  const HelmholtzForms manuf_forms(mesh, manuf);
  const PWExpansion vm = manuf_forms.make_expansion(dirs, c);
  const Complex lv = l_form(manuf_forms, vm);
  const Complex avv = a_form(manuf_forms, vm, vm);
  CHECK(std::abs(lv - avv) < 1e-10 * std::abs(avv));

  // Order-12 and order-24 rules agree for g == 1.
  HelmholtzParams ones = params_with_zero_g(omega, omega * omega, 1.0);
  ones.g = [](const Vec&, const Vec&) { return Complex(1.0, 0.0); };
  const HelmholtzForms f12(mesh, ones, 12);
  const HelmholtzForms f24(mesh, ones, 24);
  auto [d1, c1] = init_directions(2, 1, 1);
  d1.angles(0, 0) = 0.0;
  Eigen::MatrixXcd one(1, 1);
  one(0, 0) = Complex(1.0, 0.0);
  const Complex l12 = l_form(f12, f12.make_expansion(d1, one));
  const Complex l24 = l_form(f24, f24.make_expansion(d1, one));
  CHECK(std::abs(l12 - l24) < 1e-10);

  // |L(v)| <= ||g|| * |||v||| on random candidates.
  for (int trial = 0; trial < 10; ++trial) {
    const PWExpansion v = random_expansion(f12, 4, rng);
    CHECK(std::abs(l_form(f12, v)) <=
          f12.g_l2_norm() * energy_norm(f12, v) * (1.0 + 1e-10));
  }
}

TEST_CASE("residual and eta contracts") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  const double omega = 2.0 * kPi;

  // Manufactured exact solution: a plane wave; g is its impedance trace.
  const Vec W = direction_vector_2d(0.3);
  const BenchmarkProblem prob = manufactured_plane_wave(2, omega, W, Complex(1.0, 0.0));
  HelmholtzParams hp;
  hp.omega = omega;
  hp.alpha = omega * omega;
  hp.beta = 1.0;
  hp.g = prob.g_scalar;
  const HelmholtzForms forms(mesh, hp);

  // u_prev = 0: residual(v) = Re L(v).
  std::mt19937 rng(13);
  const PWExpansion v = random_expansion(forms, 5, rng);
  const TraceTable vt = forms.expansion_traces(v);
  const TraceTable zero = forms.zero_traces();
  CHECK(residual(forms, zero, vt) == doctest::Approx(l_form(forms, v).real()).epsilon(1e-12));

  // v = u - u_prev direction: eta equals the energy error (here u_prev = 0,
  // u the exact wave, representable exactly in the expansion space).
  auto [dirs, _] = init_directions(2, 1, 1);
  DirectionSet exact_dirs;
  exact_dirs.dim = 2;
  exact_dirs.n_elements = 4;
  exact_dirs.n_dirs = 1;
  exact_dirs.angles = Eigen::MatrixXd::Constant(1, 4, 0.3);
  const PWExpansion u_span = forms.make_expansion(exact_dirs, Eigen::MatrixXcd::Ones(1, 4));
  const TraceTable ut = forms.expansion_traces(u_span);
  const double err = energy_norm(ut);  // |||u - 0|||
  CHECK(eta(forms, zero, ut) == doctest::Approx(err).epsilon(1e-10));

  // Homogeneity: eta(u_prev, 2v) = eta(u_prev, v).
  TraceTable vt2 = forms.zero_traces();
  vt2.add_scaled(vt, Complex(2.0, 0.0));
  CHECK(eta(forms, zero, vt2) == doctest::Approx(eta(forms, zero, vt)).epsilon(1e-12));

  // Cauchy-Schwarz bound: |eta| <= |||u - u_prev|||.
  for (int trial = 0; trial < 10; ++trial) {
    const PWExpansion w = random_expansion(forms, 5, rng);
    const TraceTable wt = forms.expansion_traces(w);
    CHECK(std::abs(eta(forms, zero, wt)) <= err * (1.0 + 1e-10));
  }

  // v orthogonal to the error in the a-inner product -> residual 0:
  // project a candidate against the error direction.
  const PWExpansion w = random_expansion(forms, 5, rng);
  TraceTable wt = forms.expansion_traces(w);
  const Complex coupling = form_dot(ut, wt);  // a(u, w)
  // subtract (a(u,w)/a(u,u)) * u from w; then a(u, w_perp) = 0
  TraceTable wperp = wt;
  wperp.add_scaled(ut, -std::conj(coupling) / (err * err));
  CHECK(std::abs(form_dot(ut, wperp)) < 1e-10 * err * energy_norm(wt));
  CHECK(std::abs(residual(forms, zero, wperp)) < 1e-10 * err * energy_norm(wt));

  // Degenerate candidate raises.
  CHECK_THROWS_AS(eta(forms, zero, forms.zero_traces()), DegenerateCandidate);
}

TEST_CASE("quadrature adequacy: order q vs q+8") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  const double omega = 2.0 * kPi;
  const int q = default_quad_order(omega, mesh_width(mesh));
  const HelmholtzForms fq(mesh, params_with_zero_g(omega, omega * omega, 1.0), q);
  const HelmholtzForms fq8(mesh, params_with_zero_g(omega, omega * omega, 1.0), q + 8);
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const PWExpansion u = random_expansion(fq, 4, rng);
    const PWExpansion v = random_expansion(fq, 4, rng);
    const Complex a1 = a_form(fq, u, v);
    const Complex a2 = a_form(fq8, u, v);
    CHECK(std::abs(a1 - a2) <=
          1e-9 * std::max(1.0, std::max(std::abs(a1), std::abs(a2))));
  }
}

TEST_CASE("mesh mismatch is rejected") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  const Mesh other = build_uniform_mesh_2d(0.0, 1.0, 3, 3);
  const HelmholtzForms forms(mesh, params_with_zero_g(kPi, kPi * kPi, 1.0));
  const HelmholtzForms other_forms(other, params_with_zero_g(kPi, kPi * kPi, 1.0));
  std::mt19937 rng(1);
  const PWExpansion v = random_expansion(other_forms, 3, rng);
  CHECK_THROWS_AS(forms.expansion_traces(v), InvalidConfig);
}
