#ifndef DGPWNN_DGLSQ_HPP
#define DGPWNN_DGLSQ_HPP

#include <string>
#include <vector>

#include "dgpwnn/forms.hpp"

namespace dgpwnn {

/// Block least-squares system A c = b over all element-local dofs.
/// Global dof index = element * dofs_per_element + local dof.
struct LsqSystem {
  Eigen::MatrixXcd A;  // Hermitian PSD
  Eigen::VectorXcd b;
  Index n_elements = 0;
  Index dofs_per_element = 0;

  Index global_index(Index element, Index local) const {
    return element * dofs_per_element + local;
  }
};

/// Per-face scaled basis blocks for a fixed direction set; reused for the
/// system, the candidate traces, and the right-hand side.
std::vector<Eigen::MatrixXcd> build_basis_blocks(const FormsBase& forms, const DirectionSet& dirs);

LsqSystem assemble_from_blocks(const FormsBase& forms, const std::vector<Eigen::MatrixXcd>& blocks,
                               const TraceTable& xi, Index n_dirs);

LsqSystem assemble_system(const FormsBase& forms, const DirectionSet& dirs, const TraceTable& xi);

TraceTable traces_from_blocks(const FormsBase& forms, const std::vector<Eigen::MatrixXcd>& blocks,
                              const Eigen::VectorXcd& c, Index dofs_per_element);

struct RegularizedSolution {
  Eigen::VectorXcd c;
  double rel_residual = 0.0;  // ||A c - b|| / ||b||
  Index rank = 0;             // eigenvalues kept
};

/// Least-squares solve by Hermitian eigendecomposition with relative
/// truncation: eigenvalues below threshold * lambda_max are dropped.
RegularizedSolution solve_regularized(const LsqSystem& system, double rel_threshold = 1e-12);

/// Coefficients and candidate for the current direction set: the projection
/// of the remaining error onto the element-wise plane-wave space.
struct DglsqResult {
  Eigen::VectorXcd c;
  PWExpansion candidate;
  TraceTable candidate_traces;
  double rel_residual = 0.0;
};

DglsqResult dglsq_r(const FormsBase& forms, const DirectionSet& dirs, const TraceTable& u_prev);

/// Text dump: one header line with dims, then row-major "re im" pairs.
void dump_matrix(const Eigen::MatrixXcd& M, const std::string& path);
void dump_vector(const Eigen::VectorXcd& v, const std::string& path);

}  // namespace dgpwnn

#endif
