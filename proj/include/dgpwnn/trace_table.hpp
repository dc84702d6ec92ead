#ifndef DGPWNN_TRACE_TABLE_HPP
#define DGPWNN_TRACE_TABLE_HPP

#include <vector>

#include "dgpwnn/types.hpp"

namespace dgpwnn {

/// Per-face trace samples of a piecewise function, flattened to one complex
/// vector per face (index = row + n_rows * node). Rows are the face's
/// mismatch channels -- boundary impedance traces and interior jumps -- with
/// sqrt(channel weight * quadrature weight) folded in, so every form
/// integral reduces to a plain dot product and Hermitian/PSD structure is
/// exact by construction.
struct TraceTable {
  std::vector<Eigen::VectorXcd> face;

  Index n_faces() const { return static_cast<Index>(face.size()); }

  void add_scaled(const TraceTable& other, Complex s) {
    for (size_t f = 0; f < face.size(); ++f) face[f] += s * other.face[f];
  }

  TraceTable& operator-=(const TraceTable& other) {
    for (size_t f = 0; f < face.size(); ++f) face[f] -= other.face[f];
    return *this;
  }

  static TraceTable zeros_like(const TraceTable& proto) {
    TraceTable t;
    t.face.reserve(proto.face.size());
    for (const auto& v : proto.face) t.face.push_back(Eigen::VectorXcd::Zero(v.size()));
    return t;
  }
};

/// sum over faces of u .* conj(v); equals a(u,v) for trace tables built by
/// the forms layer.
inline Complex form_dot(const TraceTable& u, const TraceTable& v) {
  Complex acc{0.0, 0.0};
  for (size_t f = 0; f < u.face.size(); ++f) acc += v.face[f].dot(u.face[f]);
  return acc;
}

}  // namespace dgpwnn

#endif
