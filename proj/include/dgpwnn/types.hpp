#ifndef DGPWNN_TYPES_HPP
#define DGPWNN_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace dgpwnn {

using Complex = std::complex<double>;
using Index = Eigen::Index;

using Vec = Eigen::Vector3d;     // points/normals; z = 0 in 2D
using CVec3 = Eigen::Vector3cd;  // complex fields

inline constexpr Complex kImag{0.0, 1.0};

/// Axis-aligned box. In 2D the z-extent is degenerate (lo.z == hi.z == 0).
struct Box {
  Vec lo = Vec::Zero();
  Vec hi = Vec::Zero();

  double extent(int axis) const { return hi[axis] - lo[axis]; }
  Vec center() const { return 0.5 * (lo + hi); }
};

struct InvalidConfig : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateSystem : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Candidate with vanishing energy norm; callers treat it as "nothing left
/// to project" and stop.
struct DegenerateCandidate : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace dgpwnn

#endif
