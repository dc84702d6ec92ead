#ifndef DGPWNN_TRAINER_HPP
#define DGPWNN_TRAINER_HPP

#include <random>
#include <vector>

#include "dgpwnn/dglsq.hpp"
#include "dgpwnn/forms.hpp"

namespace dgpwnn {

struct AdamState {
  Eigen::MatrixXd m;  // first moments, same shape as the angle matrix
  Eigen::MatrixXd v;  // second moments
  int step = 0;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  double lr0 = 0.01;

  static AdamState for_directions(const DirectionSet& dirs, double lr0 = 0.01);
};

struct TrainConfig {
  int max_epochs = 500;
  double grad_tol = 1e-6;  // infinity-norm stop on the eta gradient
  double lr0 = 0.01;
  unsigned int seed = 0;
};

/// One optimizer step with bias correction and learning rate lr0/sqrt(step);
/// gradient is ascended when `ascend`. Angles are wrapped to (-pi,pi]
/// (headings, azimuths) and polar angles clamped to [0,pi] afterwards.
void adam_step(AdamState& state, DirectionSet& dirs, const Eigen::MatrixXd& gradient, bool ascend);

struct EtaGradient {
  Eigen::MatrixXd grad;  // (angles_per_element x n_elements)
  double eta = 0.0;
  double norm = 0.0;  // |||v|||
  double residual_value = 0.0;
};

/// Analytic gradient of eta(u_prev, v) with respect to the hidden angles,
/// coefficients held fixed. `xi` is g - traces(u_prev). When `shuffle` is
/// given, per-node contributions are accumulated in a seeded-random order
/// (full-batch value, shuffled summation).
EtaGradient grad_eta(const FormsBase& forms, const TraceTable& xi, const PWExpansion& v,
                     const TraceTable& v_traces, std::mt19937* shuffle = nullptr);

struct EpochRecord {
  int epoch = 0;
  double eta = 0.0;
  double grad_inf = 0.0;
  double loss = 0.0;  // J(u_prev + v)
};

/// Energy-normalized network function with cached face traces and volume
/// values.
struct BasisFunction {
  PWExpansion expansion;
  TraceTable traces;
  std::vector<Eigen::VectorXcd> volume;  // per element, (components * nodes)
  double l2_norm = 0.0;
};

struct AugmentResult {
  BasisFunction basis;
  double eta_value = 0.0;
  int epochs_used = 0;
  std::vector<EpochRecord> trace;
  bool init_clamped = false;  // a polar init angle was clamped into range
};

/// Basis generation: init directions, solve coefficients, then epochs of
/// {Adam ascent on angles, polar correction, coefficient re-solve} until the
/// gradient stop or the epoch cap. Returns the normalized candidate and its
/// estimator value. Throws DegenerateCandidate when the projection of the
/// remaining error vanishes.
AugmentResult augment_basis(const FormsBase& forms, const TraceTable& u_prev, Index width,
                            const TrainConfig& config, std::mt19937& rng);

inline constexpr double kPolarThreshold = 1e-3;
inline constexpr double kPolarDisturbance = 1e-2;

}  // namespace dgpwnn

#endif
