#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dgpwnn/planewave.hpp"

using namespace dgpwnn;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("direction vectors") {
  CHECK((direction_vector_2d(0.0) - Vec(1.0, 0.0, 0.0)).norm() < 1e-15);
  CHECK((direction_vector_3d(0.0, 1.234) - Vec(0.0, 0.0, 1.0)).norm() < 1e-15);
  CHECK((direction_vector_3d(kPi / 2.0, kPi / 2.0) - Vec(0.0, 1.0, 0.0)).norm() < 1e-15);

  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int i = 0; i < 200; ++i) {
    CHECK(std::abs(direction_vector_2d(u(rng)).norm() - 1.0) < 1e-14);
    CHECK(std::abs(direction_vector_3d(std::abs(u(rng)), u(rng)).norm() - 1.0) < 1e-14);
  }
}

TEST_CASE("uniform initialization matches the closed forms") {
  auto [d4, c4] = init_directions(2, 4, 3);
  CHECK_FALSE(c4);
  CHECK(d4.angles.rows() == 4);
  CHECK(d4.angles.cols() == 3);
  for (Index k = 0; k < 3; ++k) {
    CHECK(d4.angles(0, k) == doctest::Approx(-kPi / 2.0));
    CHECK(d4.angles(1, k) == doctest::Approx(0.0));
    CHECK(d4.angles(2, k) == doctest::Approx(kPi / 2.0));
    CHECK(d4.angles(3, k) == doctest::Approx(kPi));
  }

  auto [d1, c1] = init_directions(2, 1, 1);
  CHECK_FALSE(c1);
  CHECK(d1.angles(0, 0) == doctest::Approx(kPi));

  auto [s4, clamped] = init_directions(3, 4, 2);
  CHECK(clamped);  // zeta_{m*} = pi + pi/(3 m*) exceeds pi and is clamped
  CHECK(s4.t_star == 8);
  CHECK(s4.n_dirs == 32);
  CHECK(s4.angles(8 + 0, 0) == doctest::Approx(kPi / 12.0));
  CHECK(s4.angles(8 + 1, 0) == doctest::Approx(kPi / 3.0 + kPi / 12.0));
  CHECK(s4.angles(8 + 2, 0) == doctest::Approx(2.0 * kPi / 3.0 + kPi / 12.0));
  CHECK(s4.angles(8 + 3, 0) == doctest::Approx(kPi));
  for (Index t = 1; t <= 8; ++t)
    CHECK(s4.angles(t - 1, 1) == doctest::Approx(-kPi + 2.0 * kPi * t / 8.0));

  CHECK_THROWS_AS(init_directions(3, 1, 1), InvalidConfig);
  CHECK_THROWS_AS(init_directions(2, 0, 1), InvalidConfig);
}

TEST_CASE("polar angle correction") {
  Eigen::VectorXd z(1);
  z << 0.0;
  correct_polar_angles(z, 1e-3, 1e-2);
  CHECK(z(0) == doctest::Approx(0.01));

  z << kPi / 2.0;
  correct_polar_angles(z, 1e-3, 1e-2);
  CHECK(z(0) == doctest::Approx(kPi / 2.0));

  z << kPi;
  correct_polar_angles(z, 1e-3, 1e-2);
  CHECK(z(0) == doctest::Approx(kPi - 0.01));

  Eigen::VectorXd many(4);
  many << 1e-5, 0.7, kPi - 1e-5, 2.0;
  correct_polar_angles(many, 1e-3, 1e-2);
  for (Index i = 0; i < many.size(); ++i) CHECK(std::abs(std::sin(many(i))) >= 1e-3);
  CHECK(many(1) == doctest::Approx(0.7));
  CHECK(many(3) == doctest::Approx(2.0));
}

TEST_CASE("scalar wave values and gradients") {
  auto [v1, g1] = eval_scalar_wave(kPi, Vec(1.0, 0.0, 0.0), Vec(1.0, 0.0, 0.0));
  CHECK(std::abs(v1 - Complex(-1.0, 0.0)) < 1e-14);

  auto [v2, g2] = eval_scalar_wave(2.0 * kPi, Vec(0.0, 1.0, 0.0), Vec(0.25, 0.25, 0.0));
  CHECK(std::abs(v2 - Complex(0.0, 1.0)) < 1e-14);

  auto [v3, g3] = eval_scalar_wave(kPi, Vec(1.0, 0.0, 0.0), Vec(0.0, 0.0, 0.0));
  CHECK(std::abs(g3(0) - Complex(0.0, kPi)) < 1e-14);
  CHECK(std::abs(g3(1)) < 1e-14);

  // Gradients match central finite differences in x.
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const double h = 1e-6;
  for (int trial = 0; trial < 20; ++trial) {
    const Vec W = direction_vector_3d(1.1 + 0.3 * u(rng), 0.4 + u(rng));
    const Vec x(u(rng), u(rng), u(rng));
    auto [v, g] = eval_scalar_wave(3.7, W, x);
    for (int a = 0; a < 3; ++a) {
      Vec xp = x, xm = x;
      xp[a] += h;
      xm[a] -= h;
      const Complex fd = (eval_scalar_wave(3.7, W, xp).first - eval_scalar_wave(3.7, W, xm).first) / (2.0 * h);
      CHECK(std::abs(fd - g(a)) / std::abs(g(a)) < 1e-6);
    }
  }
}

TEST_CASE("polarization frames") {
  const PolarizationFrame f1 = polarization_frame(Vec(0.0, 0.0, 1.0));
  CHECK((f1.G - Vec(0.0, -1.0, 0.0)).norm() < 1e-14);
  CHECK((f1.F_high - Vec(-1.0, 0.0, 0.0)).norm() < 1e-14);

  // Degenerate |b| = 1 goes through the fallback and stays orthonormal.
  const PolarizationFrame f2 = polarization_frame(Vec(0.0, 1.0, 0.0));
  CHECK(f2.fallback);
  CHECK(std::abs(f2.G.norm() - 1.0) < 1e-12);
  CHECK(std::abs(f2.G.dot(Vec(0.0, 1.0, 0.0))) < 1e-12);

  std::mt19937 rng(17);
  std::uniform_real_distribution<double> u(-kPi, kPi);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec W = direction_vector_3d(std::abs(u(rng)) / 2.0, u(rng));
    const PolarizationFrame f = polarization_frame(W);
    CHECK(std::abs(f.G.norm() - 1.0) < 1e-12);
    CHECK(std::abs(f.G.dot(W)) < 1e-12);
    CHECK(std::abs(f.F_high.norm() - 1.0) < 1e-12);
    CHECK(std::abs(f.F_high.dot(W)) < 1e-12);
  }
}

TEST_CASE("maxwell plane-wave fields") {
  const PolarizationFrame frame = polarization_frame(Vec(0.0, 0.0, 1.0));
  auto [E_low, curl_low] = eval_maxwell_wave(1.0, Complex(kPi, 0.0), frame, 0, Vec(0.0, 0.0, 1.0));
  CHECK((E_low - CVec3(Complex(0.0, 0.0), Complex(1.0, 0.0), Complex(0.0, 0.0))).norm() < 1e-14);

  auto [E0, curl0] = eval_maxwell_wave(1.0, Complex(kPi, 0.0), frame, 0, Vec::Zero());
  CHECK((curl0 - CVec3(Complex(0.0, kPi), Complex(0.0, 0.0), Complex(0.0, 0.0))).norm() < 1e-14);

  auto [E_high, curl_high] = eval_maxwell_wave(1.0, Complex(kPi, 0.0), frame, 1, Vec::Zero());
  CHECK((E_high - CVec3(Complex(-1.0, 0.0), Complex(0.0, 0.0), Complex(0.0, 0.0))).norm() < 1e-14);

  // First-order system check by finite differences:
  // curl(curl E)/(i w mu) + i w eps E = 0 at random points.
  const double omega = 1.3, mu = 1.0;
  const Complex eps(1.0, 1.0);
  const Complex kappa = omega * std::sqrt(Complex(mu, 0.0) * eps);
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> u(-0.4, 0.4);
  const double h = 1e-5;
  for (int trial = 0; trial < 10; ++trial) {
    const Vec W = direction_vector_3d(1.0 + u(rng), 0.3 + u(rng));
    const PolarizationFrame f = polarization_frame(W);
    const int branch = trial % 2;
    const Vec x(u(rng), u(rng), u(rng));
    auto curl_at = [&](const Vec& p) { return eval_maxwell_wave(mu, kappa, f, branch, p).second; };
    CVec3 curl_curl = CVec3::Zero();
    // central differences of the curl field
    auto diff = [&](int a, const Vec& p) {
      Vec pp = p, pm = p;
      pp[a] += h;
      pm[a] -= h;
      return CVec3(((curl_at(pp) - curl_at(pm)) / (2.0 * h)).eval());
    };
    const CVec3 dx = diff(0, x), dy = diff(1, x), dz = diff(2, x);
    curl_curl << dy(2) - dz(1), dz(0) - dx(2), dx(1) - dy(0);
    const CVec3 E = eval_maxwell_wave(mu, kappa, f, branch, x).first;
    const CVec3 res = curl_curl / (kImag * omega * mu) + kImag * omega * eps * E;
    CHECK(res.norm() / E.norm() < 1e-6);
  }
}

TEST_CASE("direction derivative matches finite differences") {
  auto [dirs, clamped] = init_directions(3, 3, 1);
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-0.3, 0.3);
  for (Index p = 0; p < dirs.angles_per_element(); ++p) dirs.angles(p, 0) += u(rng);

  const double h = 1e-7;
  for (Index l = 0; l < dirs.n_dirs; ++l) {
    for (Index p = 0; p < dirs.angles_per_element(); ++p) {
      DirectionSet dp = dirs, dm = dirs;
      dp.angles(p, 0) += h;
      dm.angles(p, 0) -= h;
      const Vec fd = (dp.direction(0, l) - dm.direction(0, l)) / (2.0 * h);
      const Vec an = dirs.direction_derivative(0, l, p);
      CHECK((fd - an).norm() < 1e-8);
    }
  }
}
