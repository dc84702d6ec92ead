#ifndef DGPWNN_QUADRATURE_HPP
#define DGPWNN_QUADRATURE_HPP

#include <vector>

#include "dgpwnn/mesh.hpp"
#include "dgpwnn/types.hpp"

namespace dgpwnn {

/// Quadrature nodes in physical coordinates; weights carry the facet or
/// element measure.
struct QuadRule {
  std::vector<Vec> points;
  std::vector<double> weights;

  Index size() const { return static_cast<Index>(points.size()); }
  double measure() const;
};

/// Gauss-Legendre nodes/weights on [-1,1], exact for degree <= 2n-1.
/// Computed by Newton iteration on the Legendre recurrence (tolerance 1e-15).
void gauss_legendre_1d(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// 1D rule mapped to a 2D edge, tensor-product rule on a 3D rectangular
/// facet. `order` is the point count per direction.
QuadRule face_quadrature(const Face& face, int order, int dim);

/// Tensor-product rule over an element box.
QuadRule volume_quadrature(const Box& element, int order, int dim);

/// Points-per-direction rule for oscillatory plane-wave integrands:
/// max(10, ceil(omega*h/pi) + 6) where h is the longest extent involved.
int default_quad_order(double omega, double h);

}  // namespace dgpwnn

#endif
