#include "dgpwnn/problems.hpp"

#include <cmath>
#include <numbers>

namespace dgpwnn {

namespace {

constexpr double kPi = std::numbers::pi;

bool inside_closure(const Vec& p, const Box& box, int dim) {
  for (int a = 0; a < dim; ++a)
    if (p[a] < box.lo[a] || p[a] > box.hi[a]) return false;
  return true;
}

Box unit_box(int dim) {
  Box b;
  b.lo = Vec::Zero();
  b.hi = dim == 2 ? Vec(1.0, 1.0, 0.0) : Vec(1.0, 1.0, 1.0);
  return b;
}

void attach_scalar_g(BenchmarkProblem& p) {
  const double omega = p.omega;
  auto value = p.value;
  auto gradient = p.gradient;
  p.g_scalar = [omega, value, gradient](const Vec& x, const Vec& n) {
    return n.cast<Complex>().dot(gradient(x)) + kImag * omega * value(x);
  };
}

CVec3 ccross(const CVec3& u, const Vec& n) {
  return CVec3(u.y() * n.z() - u.z() * n.y(), u.z() * n.x() - u.x() * n.z(),
               u.x() * n.y() - u.y() * n.x());
}

void attach_vector_g(BenchmarkProblem& p) {
  const Complex fac = p.varsigma / (kImag * p.omega * p.mu);
  auto field = p.field;
  auto curl = p.curl;
  p.g_vector = [fac, field, curl](const Vec& x, const Vec& n) {
    const CVec3 E = field(x);
    const CVec3 C = fac * curl(x);
    return CVec3(-ccross(E, n) + ccross(ccross(C, n), n));
  };
}

}  // namespace

BenchmarkProblem waveguide_exact_2d(double omega, int mode_k) {
  if (mode_k < 0) throw InvalidConfig("waveguide: mode k must be >= 0");
  if (!(omega > mode_k * kPi))
    throw InvalidConfig("waveguide: omega <= k*pi is the evanescent regime");

  const double wx = std::sqrt(omega * omega - mode_k * kPi * mode_k * kPi);
  Eigen::Matrix2cd M;
  M << Complex(wx, 0.0), Complex(-wx, 0.0),
      (omega - wx) * std::exp(Complex(0.0, -2.0 * wx)), (omega + wx) * std::exp(Complex(0.0, 2.0 * wx));
  Eigen::Vector2cd rhs(Complex(0.0, -1.0), Complex(0.0, 0.0));
  const Eigen::Vector2cd A = M.fullPivLu().solve(rhs);

  BenchmarkProblem p;
  p.kind = BenchmarkProblem::Kind::waveguide2d;
  p.dim = 2;
  p.domain = unit_box(2);
  p.omega = omega;
  const double ky = mode_k * kPi;
  const Complex A1 = A(0), A2 = A(1);
  p.value = [=](const Vec& x) {
    return std::cos(ky * x.y()) *
           (A1 * std::exp(-kImag * wx * x.x()) + A2 * std::exp(kImag * wx * x.x()));
  };
  p.gradient = [=](const Vec& x) {
    const Complex e1 = A1 * std::exp(-kImag * wx * x.x());
    const Complex e2 = A2 * std::exp(kImag * wx * x.x());
    CVec3 grad;
    grad << std::cos(ky * x.y()) * kImag * wx * (e2 - e1), -ky * std::sin(ky * x.y()) * (e1 + e2),
        Complex(0.0, 0.0);
    return grad;
  };
  attach_scalar_g(p);
  return p;
}

BenchmarkProblem point_source_3d(double omega, const Vec& r0) {
  BenchmarkProblem p;
  p.kind = BenchmarkProblem::Kind::point_source_3d;
  p.dim = 3;
  p.domain = unit_box(3);
  p.omega = omega;
  if (inside_closure(r0, p.domain, 3))
    throw InvalidConfig("point_source_3d: source must lie outside the domain closure");
  p.value = [omega, r0](const Vec& x) {
    const double r = (x - r0).norm();
    return std::exp(kImag * omega * r) / (4.0 * kPi * r);
  };
  p.gradient = [omega, r0](const Vec& x) {
    const Vec d = x - r0;
    const double r = d.norm();
    const Complex u = std::exp(kImag * omega * r) / (4.0 * kPi * r);
    const Complex radial = u * (kImag * omega - 1.0 / r);
    return CVec3(radial * (d / r).cast<Complex>());
  };
  attach_scalar_g(p);
  return p;
}

BenchmarkProblem maxwell_dipole(double omega, Complex eps, double mu, const Vec& x0, const Vec& a,
                                Complex current, double varsigma) {
  BenchmarkProblem p;
  p.kind = BenchmarkProblem::Kind::maxwell_dipole;
  p.dim = 3;
  p.is_maxwell = true;
  p.domain.lo = Vec(-0.5, -0.5, -0.5);
  p.domain.hi = Vec(0.5, 0.5, 0.5);
  p.omega = omega;
  p.mu = mu;
  p.eps = eps;
  p.varsigma = varsigma;
  if (inside_closure(x0, p.domain, 3))
    throw InvalidConfig("maxwell_dipole: source must lie outside the domain closure");

  const Complex k = omega * std::sqrt(Complex(mu, 0.0) * eps);
  const Complex lead = current / (kImag * omega * eps);

  // phi = exp(i k r)/(4 pi r); E = lead * (k^2 phi a + grad(grad(phi).a)),
  // curl E = lead * k^2 * grad(phi) x a. Both in closed form.
  p.field = [k, lead, x0, a](const Vec& x) {
    const Vec d = x - x0;
    const double r = d.norm();
    const Vec rh = d / r;
    const Complex phi = std::exp(kImag * k * r) / (4.0 * kPi * r);
    const Complex fr = kImag * k - 1.0 / r;  // radial log-derivative of phi
    const double ra = rh.dot(a);
    const CVec3 grad_grad_phi_a =
        phi * ((fr * fr + 1.0 / (r * r)) * ra * rh.cast<Complex>() +
               (fr / r) * (a - ra * rh).cast<Complex>());
    return CVec3(lead * (k * k * phi * a.cast<Complex>() + grad_grad_phi_a));
  };
  p.curl = [k, lead, x0, a](const Vec& x) {
    const Vec d = x - x0;
    const double r = d.norm();
    const Vec rh = d / r;
    const Complex phi = std::exp(kImag * k * r) / (4.0 * kPi * r);
    const Complex fr = kImag * k - 1.0 / r;
    const Vec rxa = rh.cross(a);
    return CVec3(lead * k * k * phi * fr * rxa.cast<Complex>());
  };
  attach_vector_g(p);
  return p;
}

BenchmarkProblem manufactured_plane_wave(int dim, double omega, const Vec& W, Complex amplitude,
                                         const Box* domain) {
  BenchmarkProblem p;
  p.kind = BenchmarkProblem::Kind::manufactured_plane_wave;
  p.dim = dim;
  p.domain = domain ? *domain : unit_box(dim);
  p.omega = omega;
  p.value = [omega, W, amplitude](const Vec& x) {
    return amplitude * std::exp(kImag * omega * W.dot(x));
  };
  p.gradient = [omega, W, amplitude](const Vec& x) {
    const Complex v = amplitude * std::exp(kImag * omega * W.dot(x));
    return CVec3((kImag * omega * v) * W.cast<Complex>());
  };
  attach_scalar_g(p);
  return p;
}

ExactSamples sample_exact(const FormsBase& forms, const BenchmarkProblem& problem) {
  ExactSamples s;
  if (problem.is_maxwell) {
    const auto& mf = dynamic_cast<const MaxwellForms&>(forms);
    s.traces = mf.solution_traces(problem.field, problem.curl);
  } else {
    const auto& hf = dynamic_cast<const HelmholtzForms&>(forms);
    s.traces = hf.solution_traces(problem.value, problem.gradient);
  }
  s.energy_norm = energy_norm(s.traces);

  const Mesh& mesh = forms.mesh();
  s.volume.resize(static_cast<size_t>(mesh.n_elements()));
  double l2_sq = 0.0;
  for (Index k = 0; k < mesh.n_elements(); ++k) {
    const QuadRule& rule = forms.volume_rule(k);
    const int comps = forms.components();
    Eigen::VectorXcd vals(comps * rule.size());
    for (Index q = 0; q < rule.size(); ++q) {
      const Vec& x = rule.points[static_cast<size_t>(q)];
      if (problem.is_maxwell) {
        vals.segment<3>(3 * q) = problem.field(x);
      } else {
        vals(q) = problem.value(x);
      }
      l2_sq += rule.weights[static_cast<size_t>(q)] * vals.segment(comps * q, comps).squaredNorm();
    }
    s.volume[static_cast<size_t>(k)] = std::move(vals);
  }
  s.l2_norm = std::sqrt(l2_sq);
  return s;
}

std::pair<double, double> error_norms(const FormsBase& forms, const ExactSamples& exact,
                                      const TraceTable& u_traces,
                                      const std::vector<Eigen::VectorXcd>& u_volume) {
  const Mesh& mesh = forms.mesh();
  const int comps = forms.components();
  double l2_sq = 0.0;
  for (Index k = 0; k < mesh.n_elements(); ++k) {
    const QuadRule& rule = forms.volume_rule(k);
    const Eigen::VectorXcd diff = exact.volume[static_cast<size_t>(k)] - u_volume[static_cast<size_t>(k)];
    for (Index q = 0; q < rule.size(); ++q)
      l2_sq += rule.weights[static_cast<size_t>(q)] * diff.segment(comps * q, comps).squaredNorm();
  }
  TraceTable e = exact.traces;
  e -= u_traces;
  return {std::sqrt(l2_sq), energy_norm(e)};
}

}  // namespace dgpwnn
