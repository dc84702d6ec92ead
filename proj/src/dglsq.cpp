#include "dgpwnn/dglsq.hpp"

#include <cstdio>
#include <fstream>

#include <lapacke.h>

namespace dgpwnn {

std::vector<Eigen::MatrixXcd> build_basis_blocks(const FormsBase& forms, const DirectionSet& dirs) {
  std::vector<Eigen::MatrixXcd> blocks;
  blocks.reserve(static_cast<size_t>(forms.mesh().n_faces()));
  for (Index f = 0; f < forms.mesh().n_faces(); ++f) blocks.push_back(forms.basis_block(f, dirs));
  return blocks;
}

LsqSystem assemble_from_blocks(const FormsBase& forms, const std::vector<Eigen::MatrixXcd>& blocks,
                               const TraceTable& xi, Index n_dirs) {
  const Mesh& mesh = forms.mesh();
  const Index dofs = forms.dofs_per_element(n_dirs);
  const Index dim = mesh.n_elements() * dofs;

  LsqSystem sys;
  sys.n_elements = mesh.n_elements();
  sys.dofs_per_element = dofs;
  sys.A = Eigen::MatrixXcd::Zero(dim, dim);
  sys.b = Eigen::VectorXcd::Zero(dim);

  for (Index f = 0; f < mesh.n_faces(); ++f) {
    const Face& face = mesh.faces[static_cast<size_t>(f)];
    const Eigen::MatrixXcd& B = blocks[static_cast<size_t>(f)];
    const Eigen::MatrixXcd local = B.adjoint() * B;
    const Eigen::VectorXcd rhs = B.adjoint() * xi.face[static_cast<size_t>(f)];
    const Index k0 = face.owner * dofs;
    sys.A.block(k0, k0, dofs, dofs) += local.topLeftCorner(dofs, dofs);
    sys.b.segment(k0, dofs) += rhs.head(dofs);
    if (face.is_interior()) {
      const Index j0 = face.neighbor * dofs;
      sys.A.block(k0, j0, dofs, dofs) += local.topRightCorner(dofs, dofs);
      sys.A.block(j0, k0, dofs, dofs) += local.bottomLeftCorner(dofs, dofs);
      sys.A.block(j0, j0, dofs, dofs) += local.bottomRightCorner(dofs, dofs);
      sys.b.segment(j0, dofs) += rhs.tail(dofs);
    }
  }
  return sys;
}

LsqSystem assemble_system(const FormsBase& forms, const DirectionSet& dirs, const TraceTable& xi) {
  return assemble_from_blocks(forms, build_basis_blocks(forms, dirs), xi, dirs.n_dirs);
}

TraceTable traces_from_blocks(const FormsBase& forms, const std::vector<Eigen::MatrixXcd>& blocks,
                              const Eigen::VectorXcd& c, Index dofs_per_element) {
  const Mesh& mesh = forms.mesh();
  TraceTable t;
  t.face.resize(static_cast<size_t>(mesh.n_faces()));
  for (Index f = 0; f < mesh.n_faces(); ++f) {
    const Face& face = mesh.faces[static_cast<size_t>(f)];
    const Eigen::MatrixXcd& B = blocks[static_cast<size_t>(f)];
    Eigen::VectorXcd cl(B.cols());
    cl.head(dofs_per_element) = c.segment(face.owner * dofs_per_element, dofs_per_element);
    if (face.is_interior())
      cl.tail(dofs_per_element) = c.segment(face.neighbor * dofs_per_element, dofs_per_element);
    t.face[static_cast<size_t>(f)] = B * cl;
  }
  return t;
}

RegularizedSolution solve_regularized(const LsqSystem& system, double rel_threshold) {
  RegularizedSolution sol;
  const Index n = system.A.rows();
  const double b_norm = system.b.norm();
  if (b_norm == 0.0) {
    sol.c = Eigen::VectorXcd::Zero(n);
    return sol;
  }

  // Hermitian divide-and-conquer eigensolve; A is overwritten with the
  // eigenvectors.
  Eigen::MatrixXcd V = 0.5 * (system.A + system.A.adjoint());
  Eigen::VectorXd lam(n);
  const int info = LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'L', static_cast<lapack_int>(n),
                                  reinterpret_cast<lapack_complex_double*>(V.data()),
                                  static_cast<lapack_int>(n), lam.data());
  if (info != 0) throw DegenerateSystem("solve_regularized: eigensolve failed");

  const double lam_max = lam.maxCoeff();
  if (!(lam_max > 0.0)) throw DegenerateSystem("solve_regularized: system matrix is numerically zero");
  const double cut = rel_threshold * lam_max;

  Eigen::VectorXcd proj = V.adjoint() * system.b;
  for (Index i = 0; i < n; ++i) {
    if (lam(i) > cut) {
      proj(i) /= lam(i);
      ++sol.rank;
    } else {
      proj(i) = Complex(0.0, 0.0);
    }
  }
  sol.c = V * proj;
  sol.rel_residual = (system.A * sol.c - system.b).norm() / b_norm;
  return sol;
}

DglsqResult dglsq_r(const FormsBase& forms, const DirectionSet& dirs, const TraceTable& u_prev) {
  const TraceTable xi = xi_traces(forms, u_prev);
  const auto blocks = build_basis_blocks(forms, dirs);
  const LsqSystem sys = assemble_from_blocks(forms, blocks, xi, dirs.n_dirs);
  RegularizedSolution sol = solve_regularized(sys);

  DglsqResult result;
  result.rel_residual = sol.rel_residual;
  result.candidate_traces = traces_from_blocks(forms, blocks, sol.c, sys.dofs_per_element);
  Eigen::MatrixXcd coeffs(sys.dofs_per_element, sys.n_elements);
  for (Index k = 0; k < sys.n_elements; ++k)
    coeffs.col(k) = sol.c.segment(k * sys.dofs_per_element, sys.dofs_per_element);
  result.candidate = forms.make_expansion(dirs, std::move(coeffs));
  result.c = std::move(sol.c);
  return result;
}

void dump_matrix(const Eigen::MatrixXcd& M, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidConfig("dump_matrix: cannot open " + path);
  char buf[64];
  out << M.rows() << " " << M.cols() << "\n";
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g %.17g", M(i, j).real(), M(i, j).imag());
      out << buf << (j + 1 < M.cols() ? " " : "");
    }
    out << "\n";
  }
}

void dump_vector(const Eigen::VectorXcd& v, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidConfig("dump_vector: cannot open " + path);
  char buf[64];
  out << v.size() << " 1\n";
  for (Index i = 0; i < v.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g", v(i).real(), v(i).imag());
    out << buf << "\n";
  }
}

}  // namespace dgpwnn
