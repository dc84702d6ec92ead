#ifndef DGPWNN_PROBLEMS_HPP
#define DGPWNN_PROBLEMS_HPP

#include <functional>
#include <string>

#include "dgpwnn/forms.hpp"
#include "dgpwnn/types.hpp"

namespace dgpwnn {

/// Closed-form benchmark: exact solution plus the boundary datum it induces
/// through the impedance trace operator.
struct BenchmarkProblem {
  enum class Kind { waveguide2d, point_source_3d, maxwell_dipole, manufactured_plane_wave };

  Kind kind = Kind::manufactured_plane_wave;
  int dim = 2;
  bool is_maxwell = false;
  Box domain;
  double omega = 0.0;
  double mu = 1.0;
  Complex eps{1.0, 0.0};
  double varsigma = 1.0;

  // Scalar problems.
  std::function<Complex(const Vec&)> value;
  std::function<CVec3(const Vec&)> gradient;
  std::function<Complex(const Vec&, const Vec&)> g_scalar;  // (d_n + i w) u

  // Maxwell problems.
  std::function<CVec3(const Vec&)> field;
  std::function<CVec3(const Vec&)> curl;
  std::function<CVec3(const Vec&, const Vec&)> g_vector;  // impedance trace of E
};

/// Propagating waveguide mode on the unit square: u = cos(k pi y) *
/// (A1 exp(-i w_x x) + A2 exp(i w_x x)), w_x = sqrt(w^2 - (k pi)^2).
BenchmarkProblem waveguide_exact_2d(double omega, int mode_k);

/// Helmholtz point source u = exp(i w |r-r0|) / (4 pi |r-r0|) on [0,1]^3;
/// r0 must lie outside the closed domain.
BenchmarkProblem point_source_3d(double omega, const Vec& r0);

/// Electric dipole field on [-0.5,0.5]^3 with moment direction `a` and
/// current `current`; x0 must lie outside the closed domain.
BenchmarkProblem maxwell_dipole(double omega, Complex eps, double mu, const Vec& x0, const Vec& a,
                                Complex current, double varsigma = 1.0);

/// u = amplitude * exp(i w W.x) on a given box (defaults to the unit box).
BenchmarkProblem manufactured_plane_wave(int dim, double omega, const Vec& W, Complex amplitude,
                                         const Box* domain = nullptr);

/// Exact-solution samples on a forms object: face traces, volume values,
/// and reference norms. Computed once per run.
struct ExactSamples {
  TraceTable traces;
  std::vector<Eigen::VectorXcd> volume;  // per element, (components * nodes)
  double l2_norm = 0.0;
  double energy_norm = 0.0;
};

ExactSamples sample_exact(const FormsBase& forms, const BenchmarkProblem& problem);

/// (L2 error, energy error) of a discrete solution given by its trace table
/// and volume values.
std::pair<double, double> error_norms(const FormsBase& forms, const ExactSamples& exact,
                                      const TraceTable& u_traces,
                                      const std::vector<Eigen::VectorXcd>& u_volume);

}  // namespace dgpwnn

#endif
