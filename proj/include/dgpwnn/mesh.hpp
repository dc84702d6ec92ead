#ifndef DGPWNN_MESH_HPP
#define DGPWNN_MESH_HPP

#include <array>
#include <vector>

#include "dgpwnn/types.hpp"

namespace dgpwnn {

struct Face {
  enum class Kind { interior, boundary };

  Kind kind = Kind::boundary;
  Index owner = 0;      // lower-indexed owner
  Index neighbor = -1;  // higher-indexed owner (interior only)
  int axis = 0;         // axis the face is perpendicular to
  double coord = 0.0;   // fixed coordinate along `axis`
  Box extent;           // facet box; degenerate along `axis`
  Vec normal = Vec::Zero();  // unit; outward from `owner`

  bool is_interior() const { return kind == Kind::interior; }
};

/// Conforming uniform partition of an axis-aligned box into equal cells.
/// Elements are numbered lexicographically by cell coordinate (x fastest),
/// which fixes the k<j orientation of interior faces.
struct Mesh {
  int dim = 2;
  Box domain;
  std::array<Index, 3> divisions{1, 1, 1};
  std::vector<Box> elements;
  std::vector<Face> faces;

  Index n_elements() const { return static_cast<Index>(elements.size()); }
  Index n_faces() const { return static_cast<Index>(faces.size()); }
  Index n_interior_faces() const;
  Index n_boundary_faces() const;

  /// Faces adjacent to element k (indices into `faces`).
  const std::vector<Index>& element_faces(Index k) const { return element_faces_[k]; }

  std::vector<std::vector<Index>> element_faces_;  // filled by build_uniform_mesh
};

Mesh build_uniform_mesh(const Box& domain, const std::array<Index, 3>& divisions, int dim);

/// Convenience overloads for square/cubic domains.
Mesh build_uniform_mesh_2d(double lo, double hi, Index nx, Index ny);
Mesh build_uniform_mesh_3d(double lo, double hi, Index nx, Index ny, Index nz);

/// Max element edge length.
double mesh_width(const Mesh& mesh);

}  // namespace dgpwnn

#endif
