#include "dgpwnn/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace dgpwnn {

namespace {

Index cell_index(Index ix, Index iy, Index iz, const std::array<Index, 3>& div) {
  return ix + div[0] * (iy + div[1] * iz);
}

}  // namespace

Index Mesh::n_interior_faces() const {
  Index n = 0;
  for (const auto& f : faces) n += f.is_interior() ? 1 : 0;
  return n;
}

Index Mesh::n_boundary_faces() const { return n_faces() - n_interior_faces(); }

Mesh build_uniform_mesh(const Box& domain, const std::array<Index, 3>& divisions, int dim) {
  if (dim != 2 && dim != 3) throw InvalidConfig("mesh: dim must be 2 or 3");
  std::array<Index, 3> div = divisions;
  if (dim == 2) div[2] = 1;
  for (int a = 0; a < dim; ++a) {
    if (div[a] < 1) throw InvalidConfig("mesh: divisions must be >= 1 per axis");
    if (!(domain.hi[a] > domain.lo[a])) throw InvalidConfig("mesh: degenerate domain");
  }

  Mesh mesh;
  mesh.dim = dim;
  mesh.domain = domain;
  if (dim == 2) {
    mesh.domain.lo[2] = 0.0;
    mesh.domain.hi[2] = 0.0;
  }
  mesh.divisions = div;

  std::array<double, 3> h{0.0, 0.0, 0.0};
  for (int a = 0; a < dim; ++a) h[a] = domain.extent(a) / static_cast<double>(div[a]);

  auto cell_box = [&](Index ix, Index iy, Index iz) {
    Box b;
    std::array<Index, 3> c{ix, iy, iz};
    for (int a = 0; a < dim; ++a) {
      b.lo[a] = domain.lo[a] + h[a] * static_cast<double>(c[a]);
      b.hi[a] = domain.lo[a] + h[a] * static_cast<double>(c[a] + 1);
    }
    return b;
  };

  for (Index iz = 0; iz < div[2]; ++iz)
    for (Index iy = 0; iy < div[1]; ++iy)
      for (Index ix = 0; ix < div[0]; ++ix) mesh.elements.push_back(cell_box(ix, iy, iz));

  mesh.element_faces_.resize(mesh.elements.size());

  auto add_face = [&](Face f) {
    const Index id = mesh.n_faces();
    mesh.element_faces_[f.owner].push_back(id);
    if (f.is_interior()) mesh.element_faces_[f.neighbor].push_back(id);
    mesh.faces.push_back(std::move(f));
  };

  // One pass per axis: every cell contributes its low-side face; the last
  // cell along the axis also contributes the high-side boundary face.
  for (int axis = 0; axis < dim; ++axis) {
    for (Index iz = 0; iz < div[2]; ++iz)
      for (Index iy = 0; iy < div[1]; ++iy)
        for (Index ix = 0; ix < div[0]; ++ix) {
          std::array<Index, 3> c{ix, iy, iz};
          const Index k = cell_index(ix, iy, iz, div);
          const Box cell = mesh.elements[static_cast<size_t>(k)];

          Face low;
          low.axis = axis;
          low.coord = cell.lo[axis];
          low.extent = cell;
          low.extent.lo[axis] = low.extent.hi[axis] = low.coord;
          if (c[axis] == 0) {
            low.kind = Face::Kind::boundary;
            low.owner = k;
            low.normal = Vec::Zero();
            low.normal[axis] = -1.0;
          } else {
            std::array<Index, 3> cl = c;
            cl[axis] -= 1;
            low.kind = Face::Kind::interior;
            low.owner = cell_index(cl[0], cl[1], cl[2], div);  // lower index
            low.neighbor = k;
            low.normal = Vec::Zero();
            low.normal[axis] = +1.0;  // outward from the lower-indexed owner
          }
          add_face(low);

          if (c[axis] == div[axis] - 1) {
            Face high;
            high.axis = axis;
            high.coord = cell.hi[axis];
            high.extent = cell;
            high.extent.lo[axis] = high.extent.hi[axis] = high.coord;
            high.kind = Face::Kind::boundary;
            high.owner = k;
            high.normal = Vec::Zero();
            high.normal[axis] = +1.0;
            add_face(high);
          }
        }
  }

  return mesh;
}

Mesh build_uniform_mesh_2d(double lo, double hi, Index nx, Index ny) {
  Box b;
  b.lo = Vec(lo, lo, 0.0);
  b.hi = Vec(hi, hi, 0.0);
  return build_uniform_mesh(b, {nx, ny, 1}, 2);
}

Mesh build_uniform_mesh_3d(double lo, double hi, Index nx, Index ny, Index nz) {
  Box b;
  b.lo = Vec(lo, lo, lo);
  b.hi = Vec(hi, hi, hi);
  return build_uniform_mesh(b, {nx, ny, nz}, 3);
}

double mesh_width(const Mesh& mesh) {
  double h = 0.0;
  for (const auto& el : mesh.elements)
    for (int a = 0; a < mesh.dim; ++a) h = std::max(h, el.extent(a));
  return h;
}

}  // namespace dgpwnn
