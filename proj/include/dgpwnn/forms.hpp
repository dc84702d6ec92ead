#ifndef DGPWNN_FORMS_HPP
#define DGPWNN_FORMS_HPP

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "dgpwnn/mesh.hpp"
#include "dgpwnn/planewave.hpp"
#include "dgpwnn/quadrature.hpp"
#include "dgpwnn/trace_table.hpp"
#include "dgpwnn/types.hpp"

namespace dgpwnn {

struct HelmholtzParams {
  double omega = 0.0;
  double alpha = 0.0;  // interface value-jump weight; defaults to omega^2
  double beta = 1.0;   // interface normal-derivative-jump weight
  std::function<Complex(const Vec& x, const Vec& n)> g;
};

struct MaxwellParams {
  double omega = 0.0;
  double mu = 1.0;
  Complex eps{1.0, 0.0};
  double varsigma = 1.0;
  double rho1 = 1.0;  // tangential-jump weight
  double rho2 = 1.0;  // scaled curl-jump weight
  std::function<CVec3(const Vec& x, const Vec& n)> g;

  Complex kappa() const { return omega * std::sqrt(Complex(mu, 0.0) * eps); }
};

/// Assembles everything the least-squares method needs on a mesh: per-face
/// quadrature, channel-weighted trace rows, element-local basis blocks and
/// their angle derivatives, and closed-form element L2 Grams. The two
/// concrete classes below fill in the scalar and vector trace operators.
class FormsBase {
 public:
  virtual ~FormsBase() = default;

  const Mesh& mesh() const { return mesh_; }
  double omega() const { return omega_; }
  int components() const { return components_; }
  bool is_maxwell() const { return components_ == 3; }
  int quad_order_used() const { return quad_order_used_; }

  const QuadRule& face_rule(Index f) const { return face_rules_[static_cast<size_t>(f)]; }
  const QuadRule& volume_rule(Index k) const { return volume_rules_[static_cast<size_t>(k)]; }
  Index face_rows(Index f) const;
  Index face_flat_size(Index f) const { return face_rows(f) * face_rule(f).size(); }

  /// Boundary datum as a trace table (interior rows zero); L(v) = dot(g, v).
  const TraceTable& g_traces() const { return g_traces_; }
  double g_l2_norm() const { return g_l2_norm_; }

  TraceTable zero_traces() const;

  virtual Index dofs_per_element(Index n_dirs) const = 0;

  /// Scaled trace rows of the element-supported basis functions on face f:
  /// (rows * nodes) x (dofs per owner, owner k block then neighbor j block).
  virtual Eigen::MatrixXcd basis_block(Index f, const DirectionSet& dirs) const = 0;

  /// Scaled trace rows of d(v)/d(angle) on face f, coefficients held fixed:
  /// (rows * nodes) x (angles per owner element, owner block then neighbor).
  virtual Eigen::MatrixXcd angle_derivative_block(Index f, const PWExpansion& v) const = 0;

  /// Unweighted field values of the element dofs at the element's volume
  /// quadrature nodes: (components * nodes) x dofs.
  virtual Eigen::MatrixXcd element_volume_matrix(Index k, const PWExpansion& proto) const = 0;

  /// Closed-form element L2 Gram M with M(l,j) = integral of psi_j conj(psi_l).
  virtual Eigen::MatrixXcd element_l2_gram(Index k, const PWExpansion& proto) const = 0;

  virtual PWExpansion make_expansion(DirectionSet dirs, Eigen::MatrixXcd coeffs) const = 0;

  TraceTable expansion_traces(const PWExpansion& v) const;
  double expansion_l2_norm(const PWExpansion& v) const;
  void check_compatible(const PWExpansion& v) const;

 protected:
  FormsBase(Mesh mesh, double omega, int components, std::optional<int> quad_order);

  /// Fills rules, scale vectors, and the g table; called by derived ctors.
  void finalize();
  virtual Eigen::VectorXcd sample_g(Index f) const = 0;  // unscaled boundary values, flat
  virtual void channel_weights(Index f, Eigen::VectorXd& w) const = 0;  // per row

  const Eigen::VectorXd& face_scale(Index f) const { return face_scale_[static_cast<size_t>(f)]; }

  Mesh mesh_;
  double omega_ = 0.0;
  int components_ = 1;
  int quad_order_used_ = 0;
  std::vector<QuadRule> face_rules_;
  std::vector<QuadRule> volume_rules_;
  std::vector<Eigen::VectorXd> face_scale_;  // sqrt(channel weight * node weight), flat
  TraceTable g_traces_;
  double g_l2_norm_ = 0.0;
};

class HelmholtzForms : public FormsBase {
 public:
  HelmholtzForms(Mesh mesh, HelmholtzParams params, std::optional<int> quad_order = {});

  const HelmholtzParams& params() const { return params_; }

  Index dofs_per_element(Index n_dirs) const override { return n_dirs; }
  Eigen::MatrixXcd basis_block(Index f, const DirectionSet& dirs) const override;
  Eigen::MatrixXcd angle_derivative_block(Index f, const PWExpansion& v) const override;
  Eigen::MatrixXcd element_volume_matrix(Index k, const PWExpansion& proto) const override;
  Eigen::MatrixXcd element_l2_gram(Index k, const PWExpansion& proto) const override;
  PWExpansion make_expansion(DirectionSet dirs, Eigen::MatrixXcd coeffs) const override;

  /// Trace table of a globally smooth scalar field given by callables.
  TraceTable solution_traces(const std::function<Complex(const Vec&)>& value,
                             const std::function<CVec3(const Vec&)>& gradient) const;

 protected:
  Eigen::VectorXcd sample_g(Index f) const override;
  void channel_weights(Index f, Eigen::VectorXd& w) const override;

 private:
  HelmholtzParams params_;
};

class MaxwellForms : public FormsBase {
 public:
  MaxwellForms(Mesh mesh, MaxwellParams params, std::optional<int> quad_order = {});

  const MaxwellParams& params() const { return params_; }
  Complex kappa() const { return params_.kappa(); }

  Index dofs_per_element(Index n_dirs) const override { return 2 * n_dirs; }
  Eigen::MatrixXcd basis_block(Index f, const DirectionSet& dirs) const override;
  Eigen::MatrixXcd angle_derivative_block(Index f, const PWExpansion& v) const override;
  Eigen::MatrixXcd element_volume_matrix(Index k, const PWExpansion& proto) const override;
  Eigen::MatrixXcd element_l2_gram(Index k, const PWExpansion& proto) const override;
  PWExpansion make_expansion(DirectionSet dirs, Eigen::MatrixXcd coeffs) const override;

  TraceTable solution_traces(const std::function<CVec3(const Vec&)>& field,
                             const std::function<CVec3(const Vec&)>& curl) const;

 protected:
  Eigen::VectorXcd sample_g(Index f) const override;
  void channel_weights(Index f, Eigen::VectorXd& w) const override;

 private:
  MaxwellParams params_;
};

// Form evaluation over trace tables. a(u,v) conjugates the second slot.
inline Complex a_form(const TraceTable& u, const TraceTable& v) { return form_dot(u, v); }
inline Complex l_form(const FormsBase& forms, const TraceTable& v) {
  return form_dot(forms.g_traces(), v);
}
double energy_norm(const TraceTable& v);

/// Pre-residue data g - traces(u_prev); <xi, v> = L(v) - a(u_prev, v).
TraceTable xi_traces(const FormsBase& forms, const TraceTable& u_prev);

/// <r(u_prev), v> = Re{L(v) - a(u_prev, v)}.
double residual(const FormsBase& forms, const TraceTable& u_prev, const TraceTable& v);

/// eta(u_prev, v) = <r(u_prev), v> / |||v|||; degenerate below the norm floor.
double eta(const FormsBase& forms, const TraceTable& u_prev, const TraceTable& v);

inline constexpr double kNormFloor = 1e-14;

// Expansion-level conveniences.
Complex a_form(const FormsBase& forms, const PWExpansion& u, const PWExpansion& v);
Complex l_form(const FormsBase& forms, const PWExpansion& v);
double energy_norm(const FormsBase& forms, const PWExpansion& v);

/// Quadratic misfit J(v) = |||v - data|||^2 evaluated from traces;
/// J(u) for the model problem is loss_j(traces(u)).
double loss_j(const FormsBase& forms, const TraceTable& u);

}  // namespace dgpwnn

#endif
