#include "dgpwnn/forms.hpp"

#include <cmath>

namespace dgpwnn {

namespace {

// integral of exp(i*rate*t) over [lo,hi]; rate may be complex.
Complex segment_integral(Complex rate, double lo, double hi) {
  const double h = hi - lo;
  const double c = 0.5 * (lo + hi);
  const Complex z = rate * (0.5 * h);
  Complex s;
  if (std::abs(z) < 1e-6) {
    const Complex z2 = z * z;
    s = 1.0 - z2 / 6.0 + z2 * z2 / 120.0;
  } else {
    s = std::sin(z) / z;
  }
  return std::exp(kImag * rate * c) * h * s;
}

Complex box_integral(const CVec3& rate, const Box& box, int dim) {
  Complex acc{1.0, 0.0};
  for (int a = 0; a < dim; ++a) acc *= segment_integral(rate[a], box.lo[a], box.hi[a]);
  return acc;
}

CVec3 cross(const CVec3& u, const Vec& n) {
  return CVec3(u.y() * n.z() - u.z() * n.y(), u.z() * n.x() - u.x() * n.z(),
               u.x() * n.y() - u.y() * n.x());
}

}  // namespace

FormsBase::FormsBase(Mesh mesh, double omega, int components, std::optional<int> quad_order)
    : mesh_(std::move(mesh)), omega_(omega), components_(components) {
  if (!(omega > 0.0)) throw InvalidConfig("forms: omega must be positive");
  const int dim = mesh_.dim;
  face_rules_.reserve(static_cast<size_t>(mesh_.n_faces()));
  for (const auto& f : mesh_.faces) {
    double h_face = 0.0;
    for (int a = 0; a < dim; ++a)
      if (a != f.axis) h_face = std::max(h_face, f.extent.extent(a));
    const int order = quad_order ? *quad_order : default_quad_order(omega, h_face);
    quad_order_used_ = std::max(quad_order_used_, order);
    face_rules_.push_back(face_quadrature(f, order, dim));
  }
  volume_rules_.reserve(static_cast<size_t>(mesh_.n_elements()));
  for (const auto& el : mesh_.elements) {
    double h_el = 0.0;
    for (int a = 0; a < dim; ++a) h_el = std::max(h_el, el.extent(a));
    const int order = quad_order ? *quad_order : default_quad_order(omega, h_el);
    volume_rules_.push_back(volume_quadrature(el, order, dim));
  }
}

Index FormsBase::face_rows(Index f) const {
  return mesh_.faces[static_cast<size_t>(f)].is_interior() ? 2 * components_ : components_;
}

void FormsBase::finalize() {
  face_scale_.resize(static_cast<size_t>(mesh_.n_faces()));
  g_traces_.face.resize(static_cast<size_t>(mesh_.n_faces()));
  double g_sq = 0.0;
  for (Index f = 0; f < mesh_.n_faces(); ++f) {
    const Index rows = face_rows(f);
    const QuadRule& rule = face_rule(f);
    Eigen::VectorXd w(rows);
    channel_weights(f, w);
    Eigen::VectorXd scale(rows * rule.size());
    for (Index q = 0; q < rule.size(); ++q)
      for (Index r = 0; r < rows; ++r)
        scale(r + rows * q) = std::sqrt(w(r) * rule.weights[static_cast<size_t>(q)]);
    face_scale_[static_cast<size_t>(f)] = std::move(scale);

    Eigen::VectorXcd g = Eigen::VectorXcd::Zero(rows * rule.size());
    if (!mesh_.faces[static_cast<size_t>(f)].is_interior()) {
      g = sample_g(f);
      for (Index q = 0; q < rule.size(); ++q)
        for (Index r = 0; r < rows; ++r)
          g_sq += rule.weights[static_cast<size_t>(q)] * std::norm(g(r + rows * q));
      g = g.cwiseProduct(face_scale_[static_cast<size_t>(f)].cast<Complex>());
    }
    g_traces_.face[static_cast<size_t>(f)] = std::move(g);
  }
  g_l2_norm_ = std::sqrt(g_sq);
}

TraceTable FormsBase::zero_traces() const { return TraceTable::zeros_like(g_traces_); }

void FormsBase::check_compatible(const PWExpansion& v) const {
  if (v.directions.n_elements != mesh_.n_elements())
    throw InvalidConfig("forms: expansion element count does not match mesh");
  if ((v.kind == PWExpansion::Kind::maxwell) != is_maxwell())
    throw InvalidConfig("forms: expansion kind does not match forms");
}

TraceTable FormsBase::expansion_traces(const PWExpansion& v) const {
  check_compatible(v);
  TraceTable t;
  t.face.resize(static_cast<size_t>(mesh_.n_faces()));
  const Index dofs = dofs_per_element(v.directions.n_dirs);
  for (Index f = 0; f < mesh_.n_faces(); ++f) {
    const Face& face = mesh_.faces[static_cast<size_t>(f)];
    const Eigen::MatrixXcd B = basis_block(f, v.directions);
    Eigen::VectorXcd c(B.cols());
    c.head(dofs) = v.coeffs.col(face.owner);
    if (face.is_interior()) c.tail(dofs) = v.coeffs.col(face.neighbor);
    t.face[static_cast<size_t>(f)] = B * c;
  }
  return t;
}

double FormsBase::expansion_l2_norm(const PWExpansion& v) const {
  check_compatible(v);
  double acc = 0.0;
  for (Index k = 0; k < mesh_.n_elements(); ++k) {
    const Eigen::MatrixXcd M = element_l2_gram(k, v);
    const Eigen::VectorXcd c = v.coeffs.col(k);
    acc += (c.adjoint() * M * c)(0, 0).real();
  }
  return std::sqrt(std::max(0.0, acc));
}

// ---------------------------------------------------------------------------
// Helmholtz
// ---------------------------------------------------------------------------

HelmholtzForms::HelmholtzForms(Mesh mesh, HelmholtzParams params, std::optional<int> quad_order)
    : FormsBase(std::move(mesh), params.omega, 1, quad_order), params_(std::move(params)) {
  if (params_.alpha < 0.0 || params_.beta < 0.0)
    throw InvalidConfig("helmholtz: alpha and beta must be nonnegative");
  if (!params_.g) throw InvalidConfig("helmholtz: boundary datum g is required");
  finalize();
}

void HelmholtzForms::channel_weights(Index f, Eigen::VectorXd& w) const {
  if (mesh_.faces[static_cast<size_t>(f)].is_interior()) {
    w(0) = params_.alpha;
    w(1) = params_.beta;
  } else {
    w(0) = 1.0;
  }
}

Eigen::VectorXcd HelmholtzForms::sample_g(Index f) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  Eigen::VectorXcd g(rule.size());
  for (Index q = 0; q < rule.size(); ++q)
    g(q) = params_.g(rule.points[static_cast<size_t>(q)], face.normal);
  return g;
}

Eigen::MatrixXcd HelmholtzForms::basis_block(Index f, const DirectionSet& dirs) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  const Eigen::VectorXd& scale = face_scale(f);
  const Index n = dirs.n_dirs;
  const Index nq = rule.size();
  const int owners = face.is_interior() ? 2 : 1;
  const Index rows = face_rows(f);
  const Complex iw = kImag * omega_;

  Eigen::MatrixXcd B(rows * nq, owners * n);
  for (int o = 0; o < owners; ++o) {
    const Index el = o == 0 ? face.owner : face.neighbor;
    const Vec n_e = o == 0 ? face.normal : Vec(-face.normal);
    const double sign = o == 0 ? 1.0 : -1.0;
    for (Index j = 0; j < n; ++j) {
      const Vec W = dirs.direction(el, j);
      const double wn = W.dot(n_e);
      const Index col = o * n + j;
      for (Index q = 0; q < nq; ++q) {
        const Complex val = std::exp(iw * W.dot(rule.points[static_cast<size_t>(q)]));
        if (face.is_interior()) {
          B(0 + rows * q, col) = scale(0 + rows * q) * sign * val;
          B(1 + rows * q, col) = scale(1 + rows * q) * iw * wn * val;
        } else {
          B(rows * q, col) = scale(rows * q) * (iw * wn + iw) * val;
        }
      }
    }
  }
  return B;
}

Eigen::MatrixXcd HelmholtzForms::angle_derivative_block(Index f, const PWExpansion& v) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  const Eigen::VectorXd& scale = face_scale(f);
  const DirectionSet& dirs = v.directions;
  const Index n = dirs.n_dirs;
  const Index ape = dirs.angles_per_element();
  const Index nq = rule.size();
  const int owners = face.is_interior() ? 2 : 1;
  const Index rows = face_rows(f);
  const Complex iw = kImag * omega_;

  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(rows * nq, owners * ape);
  for (int o = 0; o < owners; ++o) {
    const Index el = o == 0 ? face.owner : face.neighbor;
    const Vec n_e = o == 0 ? face.normal : Vec(-face.normal);
    const double sign = o == 0 ? 1.0 : -1.0;
    for (Index p = 0; p < ape; ++p) {
      const Index col = o * ape + p;
      for (Index l = 0; l < n; ++l) {
        if (!dirs.angle_hits_direction(l, p)) continue;
        const Vec W = dirs.direction(el, l);
        const Vec dW = dirs.direction_derivative(el, l, p);
        const double wn = W.dot(n_e);
        const double dwn = dW.dot(n_e);
        const Complex c = v.coeffs(l, el);
        for (Index q = 0; q < nq; ++q) {
          const Vec& x = rule.points[static_cast<size_t>(q)];
          const Complex val = c * std::exp(iw * W.dot(x));
          const Complex dval = iw * dW.dot(x) * val;
          if (face.is_interior()) {
            D(0 + rows * q, col) += scale(0 + rows * q) * sign * dval;
            D(1 + rows * q, col) += scale(1 + rows * q) * (iw * dwn * val + iw * wn * dval);
          } else {
            D(rows * q, col) += scale(rows * q) * (iw * dwn * val + (iw * wn + iw) * dval);
          }
        }
      }
    }
  }
  return D;
}

Eigen::MatrixXcd HelmholtzForms::element_volume_matrix(Index k, const PWExpansion& proto) const {
  const QuadRule& rule = volume_rule(k);
  const Index n = proto.directions.n_dirs;
  const Complex iw = kImag * omega_;
  Eigen::MatrixXcd V(rule.size(), n);
  for (Index j = 0; j < n; ++j) {
    const Vec W = proto.directions.direction(k, j);
    for (Index q = 0; q < rule.size(); ++q)
      V(q, j) = std::exp(iw * W.dot(rule.points[static_cast<size_t>(q)]));
  }
  return V;
}

Eigen::MatrixXcd HelmholtzForms::element_l2_gram(Index k, const PWExpansion& proto) const {
  const Index n = proto.directions.n_dirs;
  const Box& box = mesh_.elements[static_cast<size_t>(k)];
  Eigen::MatrixXcd M(n, n);
  for (Index l = 0; l < n; ++l) {
    const Vec Wl = proto.directions.direction(k, l);
    for (Index j = 0; j < n; ++j) {
      const Vec Wj = proto.directions.direction(k, j);
      const CVec3 rate = (omega_ * (Wj - Wl)).cast<Complex>();
      M(l, j) = box_integral(rate, box, mesh_.dim);
    }
  }
  return M;
}

PWExpansion HelmholtzForms::make_expansion(DirectionSet dirs, Eigen::MatrixXcd coeffs) const {
  PWExpansion v;
  v.kind = PWExpansion::Kind::scalar;
  v.wavenumber = Complex(omega_, 0.0);
  v.directions = std::move(dirs);
  v.coeffs = std::move(coeffs);
  return v;
}

TraceTable HelmholtzForms::solution_traces(const std::function<Complex(const Vec&)>& value,
                                           const std::function<CVec3(const Vec&)>& gradient) const {
  TraceTable t = zero_traces();
  const Complex iw = kImag * omega_;
  for (Index f = 0; f < mesh_.n_faces(); ++f) {
    const Face& face = mesh_.faces[static_cast<size_t>(f)];
    const QuadRule& rule = face_rule(f);
    const Eigen::VectorXd& scale = face_scale(f);
    const Index rows = face_rows(f);
    for (Index q = 0; q < rule.size(); ++q) {
      const Vec& x = rule.points[static_cast<size_t>(q)];
      if (face.is_interior()) {
        // Smooth field: value jump and normal-derivative sum vanish.
        t.face[static_cast<size_t>(f)](0 + rows * q) = 0.0;
        t.face[static_cast<size_t>(f)](1 + rows * q) = 0.0;
      } else {
        const Complex imp = face.normal.cast<Complex>().dot(gradient(x)) + iw * value(x);
        t.face[static_cast<size_t>(f)](rows * q) = scale(rows * q) * imp;
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Maxwell
// ---------------------------------------------------------------------------

MaxwellForms::MaxwellForms(Mesh mesh, MaxwellParams params, std::optional<int> quad_order)
    : FormsBase(std::move(mesh), params.omega, 3, quad_order), params_(std::move(params)) {
  if (mesh_.dim != 3) throw InvalidConfig("maxwell: mesh must be 3D");
  if (params_.rho1 < 0.0 || params_.rho2 < 0.0)
    throw InvalidConfig("maxwell: rho1 and rho2 must be nonnegative");
  if (!(params_.mu > 0.0)) throw InvalidConfig("maxwell: mu must be positive");
  if (!params_.g) throw InvalidConfig("maxwell: boundary datum g is required");
  finalize();
}

void MaxwellForms::channel_weights(Index f, Eigen::VectorXd& w) const {
  if (mesh_.faces[static_cast<size_t>(f)].is_interior()) {
    w.head(3).setConstant(params_.rho1);
    w.tail(3).setConstant(params_.rho2);
  } else {
    w.setConstant(1.0);
  }
}

Eigen::VectorXcd MaxwellForms::sample_g(Index f) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  Eigen::VectorXcd g(3 * rule.size());
  for (Index q = 0; q < rule.size(); ++q)
    g.segment<3>(3 * q) = params_.g(rule.points[static_cast<size_t>(q)], face.normal);
  return g;
}

Eigen::MatrixXcd MaxwellForms::basis_block(Index f, const DirectionSet& dirs) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  const Eigen::VectorXd& scale = face_scale(f);
  const Index n = dirs.n_dirs;
  const Index nq = rule.size();
  const int owners = face.is_interior() ? 2 : 1;
  const Index rows = face_rows(f);
  const Complex kap = params_.kappa();
  const double smu = std::sqrt(params_.mu);
  const Complex curl_scale = kap / (omega_ * params_.mu);  // (1/(i omega mu)) * i kappa

  Eigen::MatrixXcd B(rows * nq, owners * 2 * n);
  for (int o = 0; o < owners; ++o) {
    const Index el = o == 0 ? face.owner : face.neighbor;
    const Vec n_e = o == 0 ? face.normal : Vec(-face.normal);
    for (Index l = 0; l < n; ++l) {
      const Vec W = dirs.direction(el, l);
      const PolarizationFrame frame = polarization_frame(W);
      for (int b = 0; b < 2; ++b) {
        const Index col = o * 2 * n + b * n + l;
        const Vec& F = frame.F(b);
        const Vec WxF = W.cross(F);
        for (Index q = 0; q < nq; ++q) {
          const Vec& x = rule.points[static_cast<size_t>(q)];
          const Complex phase = smu * std::exp(kImag * kap * W.dot(x));
          const CVec3 E = phase * F.cast<Complex>();
          const CVec3 C = (curl_scale * phase) * WxF.cast<Complex>();  // (1/(i w mu)) curl E
          if (face.is_interior()) {
            const CVec3 tj = cross(E, n_e);
            const CVec3 cj = cross(C, n_e);
            for (int r = 0; r < 3; ++r) {
              B(r + rows * q, col) = scale(r + rows * q) * tj(r);
              B(r + 3 + rows * q, col) = scale(r + 3 + rows * q) * cj(r);
            }
          } else {
            const CVec3 tr = -cross(E, n_e) + params_.varsigma * cross(cross(C, n_e), n_e);
            for (int r = 0; r < 3; ++r) B(r + rows * q, col) = scale(r + rows * q) * tr(r);
          }
        }
      }
    }
  }
  return B;
}

Eigen::MatrixXcd MaxwellForms::angle_derivative_block(Index f, const PWExpansion& v) const {
  const Face& face = mesh_.faces[static_cast<size_t>(f)];
  const QuadRule& rule = face_rule(f);
  const Eigen::VectorXd& scale = face_scale(f);
  const DirectionSet& dirs = v.directions;
  const Index n = dirs.n_dirs;
  const Index ape = dirs.angles_per_element();
  const Index nq = rule.size();
  const int owners = face.is_interior() ? 2 : 1;
  const Index rows = face_rows(f);
  const Complex kap = params_.kappa();
  const double smu = std::sqrt(params_.mu);
  const Complex curl_scale = kap / (omega_ * params_.mu);

  Eigen::MatrixXcd D = Eigen::MatrixXcd::Zero(rows * nq, owners * ape);
  for (int o = 0; o < owners; ++o) {
    const Index el = o == 0 ? face.owner : face.neighbor;
    const Vec n_e = o == 0 ? face.normal : Vec(-face.normal);
    for (Index p = 0; p < ape; ++p) {
      const Index col = o * ape + p;
      for (Index l = 0; l < n; ++l) {
        if (!dirs.angle_hits_direction(l, p)) continue;
        const Vec W = dirs.direction(el, l);
        const Vec dW = dirs.direction_derivative(el, l, p);
        const PolarizationFrame frame = polarization_frame(W);
        const PolarizationFrameDerivative dframe = polarization_frame_derivative(frame, dW);
        for (int b = 0; b < 2; ++b) {
          const Complex c = v.coeffs(b * n + l, el);
          if (c == Complex(0.0, 0.0)) continue;
          const Vec& F = frame.F(b);
          const Vec& dF = dframe.dF(b);
          const Vec WxF = W.cross(F);
          const Vec dWxF = dW.cross(F) + W.cross(dF);
          for (Index q = 0; q < nq; ++q) {
            const Vec& x = rule.points[static_cast<size_t>(q)];
            const Complex phase = smu * std::exp(kImag * kap * W.dot(x));
            const Complex dphase_fac = kImag * kap * dW.dot(x);  // d(phase)/phase
            const CVec3 dE = (c * phase) * (dF.cast<Complex>() + dphase_fac * F.cast<Complex>());
            const CVec3 dC = (c * curl_scale * phase) *
                             (dWxF.cast<Complex>() + dphase_fac * WxF.cast<Complex>());
            if (face.is_interior()) {
              const CVec3 tj = cross(dE, n_e);
              const CVec3 cj = cross(dC, n_e);
              for (int r = 0; r < 3; ++r) {
                D(r + rows * q, col) += scale(r + rows * q) * tj(r);
                D(r + 3 + rows * q, col) += scale(r + 3 + rows * q) * cj(r);
              }
            } else {
              const CVec3 tr = -cross(dE, n_e) + params_.varsigma * cross(cross(dC, n_e), n_e);
              for (int r = 0; r < 3; ++r) D(r + rows * q, col) += scale(r + rows * q) * tr(r);
            }
          }
        }
      }
    }
  }
  return D;
}

Eigen::MatrixXcd MaxwellForms::element_volume_matrix(Index k, const PWExpansion& proto) const {
  const QuadRule& rule = volume_rule(k);
  const Index n = proto.directions.n_dirs;
  const Complex kap = params_.kappa();
  const double smu = std::sqrt(params_.mu);
  Eigen::MatrixXcd V(3 * rule.size(), 2 * n);
  for (Index l = 0; l < n; ++l) {
    const Vec W = proto.directions.direction(k, l);
    const PolarizationFrame frame = polarization_frame(W);
    for (int b = 0; b < 2; ++b) {
      const Vec& F = frame.F(b);
      for (Index q = 0; q < rule.size(); ++q) {
        const Complex phase = smu * std::exp(kImag * kap * W.dot(rule.points[static_cast<size_t>(q)]));
        V.block<3, 1>(3 * q, b * n + l) = phase * F.cast<Complex>();
      }
    }
  }
  return V;
}

Eigen::MatrixXcd MaxwellForms::element_l2_gram(Index k, const PWExpansion& proto) const {
  const Index n = proto.directions.n_dirs;
  const Box& box = mesh_.elements[static_cast<size_t>(k)];
  const Complex kap = params_.kappa();
  std::vector<Vec> W(static_cast<size_t>(n));
  std::vector<PolarizationFrame> frames(static_cast<size_t>(n));
  for (Index l = 0; l < n; ++l) {
    W[static_cast<size_t>(l)] = proto.directions.direction(k, l);
    frames[static_cast<size_t>(l)] = polarization_frame(W[static_cast<size_t>(l)]);
  }
  Eigen::MatrixXcd M(2 * n, 2 * n);
  for (Index l = 0; l < 2 * n; ++l) {
    const Index lw = l % n;
    const Vec& Fl = frames[static_cast<size_t>(lw)].F(static_cast<int>(l / n));
    for (Index j = 0; j < 2 * n; ++j) {
      const Index jw = j % n;
      const Vec& Fj = frames[static_cast<size_t>(jw)].F(static_cast<int>(j / n));
      const CVec3 rate = kap * W[static_cast<size_t>(jw)].cast<Complex>() -
                         std::conj(kap) * W[static_cast<size_t>(lw)].cast<Complex>();
      M(l, j) = params_.mu * Fj.dot(Fl) * box_integral(rate, box, 3);
    }
  }
  return M;
}

PWExpansion MaxwellForms::make_expansion(DirectionSet dirs, Eigen::MatrixXcd coeffs) const {
  PWExpansion v;
  v.kind = PWExpansion::Kind::maxwell;
  v.wavenumber = params_.kappa();
  v.mu = params_.mu;
  v.directions = std::move(dirs);
  v.coeffs = std::move(coeffs);
  return v;
}

TraceTable MaxwellForms::solution_traces(const std::function<CVec3(const Vec&)>& field,
                                         const std::function<CVec3(const Vec&)>& curl) const {
  TraceTable t = zero_traces();
  const Complex inv_iwmu = 1.0 / (kImag * omega_ * params_.mu);
  for (Index f = 0; f < mesh_.n_faces(); ++f) {
    const Face& face = mesh_.faces[static_cast<size_t>(f)];
    if (face.is_interior()) continue;  // smooth field: interior jumps vanish
    const QuadRule& rule = face_rule(f);
    const Eigen::VectorXd& scale = face_scale(f);
    const Index rows = face_rows(f);
    for (Index q = 0; q < rule.size(); ++q) {
      const Vec& x = rule.points[static_cast<size_t>(q)];
      const CVec3 E = field(x);
      const CVec3 C = inv_iwmu * curl(x);
      const CVec3 tr =
          -cross(E, face.normal) + params_.varsigma * cross(cross(C, face.normal), face.normal);
      for (int r = 0; r < 3; ++r)
        t.face[static_cast<size_t>(f)](r + rows * q) = scale(r + rows * q) * tr(r);
    }
  }
  return t;
}

// ---------------------------------------------------------------------------
// Form evaluation helpers
// ---------------------------------------------------------------------------

double energy_norm(const TraceTable& v) {
  double acc = 0.0;
  for (const auto& fv : v.face) acc += fv.squaredNorm();
  return std::sqrt(acc);
}

TraceTable xi_traces(const FormsBase& forms, const TraceTable& u_prev) {
  TraceTable xi = forms.g_traces();
  xi -= u_prev;
  return xi;
}

double residual(const FormsBase& forms, const TraceTable& u_prev, const TraceTable& v) {
  return form_dot(xi_traces(forms, u_prev), v).real();
}

double eta(const FormsBase& forms, const TraceTable& u_prev, const TraceTable& v) {
  const double nrm = energy_norm(v);
  if (nrm <= kNormFloor) throw DegenerateCandidate("eta: candidate norm below floor");
  return residual(forms, u_prev, v) / nrm;
}

Complex a_form(const FormsBase& forms, const PWExpansion& u, const PWExpansion& v) {
  return form_dot(forms.expansion_traces(u), forms.expansion_traces(v));
}

Complex l_form(const FormsBase& forms, const PWExpansion& v) {
  return form_dot(forms.g_traces(), forms.expansion_traces(v));
}

double energy_norm(const FormsBase& forms, const PWExpansion& v) {
  return energy_norm(forms.expansion_traces(v));
}

double loss_j(const FormsBase& forms, const TraceTable& u) {
  double acc = 0.0;
  for (size_t f = 0; f < u.face.size(); ++f)
    acc += (u.face[f] - forms.g_traces().face[f]).squaredNorm();
  return acc;
}

}  // namespace dgpwnn
