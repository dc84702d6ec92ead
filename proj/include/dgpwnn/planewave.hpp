#ifndef DGPWNN_PLANEWAVE_HPP
#define DGPWNN_PLANEWAVE_HPP

#include <utility>

#include "dgpwnn/types.hpp"

namespace dgpwnn {

/// Trainable per-element propagation angles (the hidden network parameters).
///
/// Per-element angle layout:
///   2D: [d_1 .. d_n],            d in (-pi, pi]
///   3D: [theta_1 .. theta_{t*}, zeta_1 .. zeta_{m*}],
///       theta in (-pi, pi], zeta in [0, pi], t* = 2 m*, n = m* t*.
/// Direction l (0-based) in 3D pairs zeta_{l / t*} with theta_{l % t*}.
struct DirectionSet {
  int dim = 2;
  Index n_elements = 0;
  Index n_dirs = 0;  // directions per element
  Index m_star = 0;  // 3D polar count
  Index t_star = 0;  // 3D azimuthal count
  Eigen::MatrixXd angles;  // (angles_per_element x n_elements)

  Index angles_per_element() const { return dim == 2 ? n_dirs : m_star + t_star; }
  Index total_angles() const { return angles_per_element() * n_elements; }

  /// Unit propagation vector for direction l of element k.
  Vec direction(Index k, Index l) const;

  /// d(direction l)/d(angle p) for element k; zero if angle p does not
  /// enter direction l.
  Vec direction_derivative(Index k, Index l, Index p) const;

  /// Whether angle p enters direction l.
  bool angle_hits_direction(Index l, Index p) const;
};

/// Unit vector from a 2D heading angle.
Vec direction_vector_2d(double d);
/// Unit vector from spherical angles (zeta from +z, theta azimuthal).
Vec direction_vector_3d(double zeta, double theta);

/// Uniform initial angles, identical on every element.
///   2D: d_j = -pi + 2*pi*j/n,                      j = 1..n
///   3D: zeta_m  = pi*(m-1)/(m*-1) + pi/(3 m*),     m = 1..m*   (clamped to [0,pi])
///       theta_t = -pi + 2*pi*t/t*,  t* = 2 m*,     t = 1..t*
/// `width` is n in 2D and m* in 3D. Returns the set and whether any zeta
/// was clamped at the top of its range.
std::pair<DirectionSet, bool> init_directions(int dim, Index width, Index n_elements);

/// Push polar angles with |sin(zeta)| < threshold into the interior of
/// [0,pi] by +-disturbance; other entries are untouched.
void correct_polar_angles(Eigen::Ref<Eigen::VectorXd> zeta, double threshold, double disturbance);

/// Wrap to (-pi, pi].
double wrap_angle(double a);

/// value = exp(i*omega*W.x), gradient = i*omega*W*value.
std::pair<Complex, CVec3> eval_scalar_wave(double omega, const Vec& W, const Vec& x);

/// Real orthonormal polarization pair for a unit direction W:
/// low = G, high = G x W, both unit and orthogonal to W.
struct PolarizationFrame {
  Vec W = Vec::UnitZ();
  Vec G = -Vec::UnitY();
  Vec F_high = -Vec::UnitX();
  bool fallback = false;  // degenerate-direction branch taken

  const Vec& F(int branch) const { return branch == 0 ? G : F_high; }
};

PolarizationFrame polarization_frame(const Vec& W);

/// Frame derivative given dW = d(W)/d(angle).
struct PolarizationFrameDerivative {
  Vec dW = Vec::Zero();
  Vec dG = Vec::Zero();
  Vec dF_high = Vec::Zero();

  const Vec& dF(int branch) const { return branch == 0 ? dG : dF_high; }
};

PolarizationFrameDerivative polarization_frame_derivative(const PolarizationFrame& frame, const Vec& dW);

/// E = sqrt(mu)*F*exp(i*kappa*W.x); curl = i*kappa*(W x F)*sqrt(mu)*exp(...).
std::pair<CVec3, CVec3> eval_maxwell_wave(double mu, Complex kappa, const PolarizationFrame& frame,
                                          int branch, const Vec& x);

/// Element-wise plane-wave function: per-element coefficients over a
/// DirectionSet. Scalar coeffs have length n per element, Maxwell 2n
/// (low-polarization block then high).
struct PWExpansion {
  enum class Kind { scalar, maxwell };

  Kind kind = Kind::scalar;
  Complex wavenumber{0.0, 0.0};  // omega (scalar) or kappa = omega*sqrt(mu*eps)
  double mu = 1.0;               // Maxwell field scaling
  DirectionSet directions;
  Eigen::MatrixXcd coeffs;  // (dofs_per_element x n_elements)

  Index dofs_per_element() const {
    return kind == Kind::scalar ? directions.n_dirs : 2 * directions.n_dirs;
  }
};

}  // namespace dgpwnn

#endif
