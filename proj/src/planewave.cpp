#include "dgpwnn/planewave.hpp"

#include <cmath>
#include <numbers>

namespace dgpwnn {

namespace {
constexpr double kPi = std::numbers::pi;
}

Vec DirectionSet::direction(Index k, Index l) const {
  if (dim == 2) return direction_vector_2d(angles(l, k));
  const Index t = l % t_star;
  const Index m = l / t_star;
  return direction_vector_3d(angles(t_star + m, k), angles(t, k));
}

bool DirectionSet::angle_hits_direction(Index l, Index p) const {
  if (dim == 2) return p == l;
  const Index t = l % t_star;
  const Index m = l / t_star;
  return p == t || p == t_star + m;
}

Vec DirectionSet::direction_derivative(Index k, Index l, Index p) const {
  if (dim == 2) {
    if (p != l) return Vec::Zero();
    const double d = angles(l, k);
    return Vec(-std::sin(d), std::cos(d), 0.0);
  }
  const Index t = l % t_star;
  const Index m = l / t_star;
  const double zeta = angles(t_star + m, k);
  const double theta = angles(t, k);
  if (p == t)
    return Vec(-std::sin(zeta) * std::sin(theta), std::sin(zeta) * std::cos(theta), 0.0);
  if (p == t_star + m)
    return Vec(std::cos(zeta) * std::cos(theta), std::cos(zeta) * std::sin(theta), -std::sin(zeta));
  return Vec::Zero();
}

Vec direction_vector_2d(double d) { return Vec(std::cos(d), std::sin(d), 0.0); }

Vec direction_vector_3d(double zeta, double theta) {
  return Vec(std::sin(zeta) * std::cos(theta), std::sin(zeta) * std::sin(theta), std::cos(zeta));
}

std::pair<DirectionSet, bool> init_directions(int dim, Index width, Index n_elements) {
  DirectionSet set;
  set.dim = dim;
  set.n_elements = n_elements;
  bool clamped = false;

  if (dim == 2) {
    if (width < 1) throw InvalidConfig("init_directions: 2D width must be >= 1");
    set.n_dirs = width;
    Eigen::VectorXd col(width);
    for (Index j = 1; j <= width; ++j)
      col(j - 1) = -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(width);
    set.angles = col.replicate(1, n_elements);
  } else if (dim == 3) {
    if (width < 2) throw InvalidConfig("init_directions: 3D m* must be >= 2");
    set.m_star = width;
    set.t_star = 2 * width;
    set.n_dirs = set.m_star * set.t_star;
    Eigen::VectorXd col(set.t_star + set.m_star);
    for (Index t = 1; t <= set.t_star; ++t)
      col(t - 1) = -kPi + 2.0 * kPi * static_cast<double>(t) / static_cast<double>(set.t_star);
    for (Index m = 1; m <= set.m_star; ++m) {
      double zeta = kPi * static_cast<double>(m - 1) / static_cast<double>(set.m_star - 1) +
                    kPi / (3.0 * static_cast<double>(set.m_star));
      if (zeta > kPi) {
        zeta = kPi;
        clamped = true;
      }
      col(set.t_star + m - 1) = zeta;
    }
    set.angles = col.replicate(1, n_elements);
  } else {
    throw InvalidConfig("init_directions: dim must be 2 or 3");
  }
  return {set, clamped};
}

void correct_polar_angles(Eigen::Ref<Eigen::VectorXd> zeta, double threshold, double disturbance) {
  for (Index i = 0; i < zeta.size(); ++i) {
    double z = zeta(i);
    for (int guard = 0; guard < 8 && std::abs(std::sin(z)) < threshold; ++guard) {
      z += (z < kPi / 2.0) ? disturbance : -disturbance;
      z = std::clamp(z, 0.0, kPi);
    }
    zeta(i) = z;
  }
}

double wrap_angle(double a) {
  double w = std::fmod(a + kPi, 2.0 * kPi);
  if (w <= 0.0) w += 2.0 * kPi;
  return w - kPi;
}

std::pair<Complex, CVec3> eval_scalar_wave(double omega, const Vec& W, const Vec& x) {
  const Complex v = std::exp(kImag * omega * W.dot(x));
  return {v, (kImag * omega * v) * W};
}

PolarizationFrame polarization_frame(const Vec& W) {
  PolarizationFrame frame;
  frame.W = W;
  const double b = W.y(), c = W.z();
  if (std::abs(b) < 1.0 - 1e-8 && std::abs(c) > 1e-8) {
    // Algebraic form of the closed-form G; |G|=1 and G.W=0 for unit W.
    const double s = std::sqrt(1.0 - b * b);
    frame.G = Vec(W.x() * b / s, -s, b * c / s);
    frame.fallback = false;
  } else {
    // Orthonormal completion against the axis least aligned with W.
    int axis = 0;
    for (int a = 1; a < 3; ++a)
      if (std::abs(W[a]) < std::abs(W[axis])) axis = a;
    Vec e = Vec::Zero();
    e[axis] = 1.0;
    const Vec g = e - e.dot(W) * W;
    frame.G = g.normalized();
    frame.fallback = true;
  }
  frame.F_high = frame.G.cross(W);
  return frame;
}

PolarizationFrameDerivative polarization_frame_derivative(const PolarizationFrame& frame, const Vec& dW) {
  PolarizationFrameDerivative d;
  d.dW = dW;
  const Vec& W = frame.W;
  if (!frame.fallback) {
    const double a = W.x(), b = W.y(), c = W.z();
    const double s = std::sqrt(1.0 - b * b);
    const double s3 = s * s * s;
    // G = (a b / s, -s, b c / s)
    d.dG = Vec(b / s, 0.0, 0.0) * dW.x() + Vec(a / s3, b / s, c / s3) * dW.y() +
           Vec(0.0, 0.0, b / s) * dW.z();
  } else {
    int axis = 0;
    for (int aa = 1; aa < 3; ++aa)
      if (std::abs(W[aa]) < std::abs(W[axis])) axis = aa;
    Vec e = Vec::Zero();
    e[axis] = 1.0;
    const Vec g = e - e.dot(W) * W;
    const Vec dg = -(e.dot(dW)) * W - e.dot(W) * dW;
    const double gn = g.norm();
    d.dG = dg / gn - g * (g.dot(dg)) / (gn * gn * gn);
  }
  d.dF_high = d.dG.cross(W) + frame.G.cross(dW);
  return d;
}

std::pair<CVec3, CVec3> eval_maxwell_wave(double mu, Complex kappa, const PolarizationFrame& frame,
                                          int branch, const Vec& x) {
  const Complex phase = std::exp(kImag * kappa * frame.W.dot(x));
  const Complex amp = std::sqrt(mu) * phase;
  const Vec& F = frame.F(branch);
  const Vec WxF = frame.W.cross(F);
  CVec3 E = amp * F.cast<Complex>();
  CVec3 curl = (kImag * kappa * amp) * WxF.cast<Complex>();
  return {E, curl};
}

}  // namespace dgpwnn
