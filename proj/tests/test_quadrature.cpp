#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "dgpwnn/quadrature.hpp"

using namespace dgpwnn;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("closed-form low order rules") {
  std::vector<double> x, w;
  gauss_legendre_1d(1, x, w);
  CHECK(x[0] == doctest::Approx(0.0));
  CHECK(w[0] == doctest::Approx(2.0));

  gauss_legendre_1d(2, x, w);
  CHECK(x[0] == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(x[1] == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(w[0] == doctest::Approx(1.0));
  CHECK(w[1] == doctest::Approx(1.0));
}

TEST_CASE("n=3 integrates x^4 to 2/5") {
  std::vector<double> x, w;
  gauss_legendre_1d(3, x, w);
  double acc = 0.0;
  for (size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(x[i], 4);
  CHECK(acc == doctest::Approx(0.4).epsilon(1e-14));
}

TEST_CASE("polynomial exactness at degree 2n-1") {
  for (int n : {2, 5, 12, 31, 64}) {
    std::vector<double> x, w;
    gauss_legendre_1d(n, x, w);
    const double p = 2.0 * n - 1.0;
    double acc = 0.0;
    for (size_t i = 0; i < x.size(); ++i) acc += w[i] * std::pow(std::abs(x[i]), p) * (x[i] < 0 ? -1.0 : 1.0);
    CHECK(std::abs(acc) < 1e-13);  // odd power integrates to zero
    // Even power 2n-2 against the analytic value 2/(2n-1).
    double even = 0.0;
    for (size_t i = 0; i < x.size(); ++i) even += w[i] * std::pow(x[i], 2 * n - 2);
    CHECK(even == doctest::Approx(2.0 / (2.0 * n - 1.0)).epsilon(1e-13));
  }
  std::vector<double> x, w;
  CHECK_THROWS_AS(gauss_legendre_1d(0, x, w), InvalidConfig);
  CHECK_THROWS_AS(gauss_legendre_1d(65, x, w), InvalidConfig);
}

TEST_CASE("edge rule on the unit square bottom") {
  Face f;
  f.kind = Face::Kind::boundary;
  f.axis = 1;
  f.coord = 0.0;
  f.extent.lo = Vec(0.0, 0.0, 0.0);
  f.extent.hi = Vec(1.0, 0.0, 0.0);
  f.normal = Vec(0.0, -1.0, 0.0);
  const QuadRule rule = face_quadrature(f, 2, 2);
  CHECK(rule.size() == 2);
  for (const auto& p : rule.points) CHECK(p.y() == doctest::Approx(0.0));
  CHECK(rule.measure() == doctest::Approx(1.0));
}

TEST_CASE("oscillatory edge integral against the antiderivative") {
  Face f;
  f.kind = Face::Kind::boundary;
  f.axis = 1;
  f.coord = 0.0;
  f.extent.lo = Vec(0.0, 0.0, 0.0);
  f.extent.hi = Vec(1.0, 0.0, 0.0);
  f.normal = Vec(0.0, -1.0, 0.0);
  const QuadRule rule = face_quadrature(f, 12, 2);
  Complex acc{0.0, 0.0};
  for (Index q = 0; q < rule.size(); ++q)
    acc += rule.weights[static_cast<size_t>(q)] *
           std::exp(Complex(0.0, kPi * rule.points[static_cast<size_t>(q)].x()));
  const Complex expected = Complex(0.0, 2.0 / kPi);  // (e^{i pi} - 1)/(i pi)
  CHECK(std::abs(acc - expected) < 1e-12);
}

TEST_CASE("3d facet rule") {
  Face f;
  f.kind = Face::Kind::boundary;
  f.axis = 2;
  f.coord = 0.0;
  f.extent.lo = Vec(0.0, 0.0, 0.0);
  f.extent.hi = Vec(1.0, 1.0, 0.0);
  f.normal = Vec(0.0, 0.0, -1.0);
  const QuadRule rule = face_quadrature(f, 3, 3);
  CHECK(rule.size() == 9);
  CHECK(rule.measure() == doctest::Approx(1.0));
}

TEST_CASE("volume rules") {
  Box el;
  el.lo = Vec(0.0, 0.0, 0.0);
  el.hi = Vec(1.0, 1.0, 0.0);
  const QuadRule r2 = volume_quadrature(el, 2, 2);
  CHECK(r2.size() == 4);
  CHECK(r2.measure() == doctest::Approx(1.0));

  const QuadRule r12 = volume_quadrature(el, 12, 2);
  Complex acc{0.0, 0.0};
  for (Index q = 0; q < r12.size(); ++q) {
    const Vec& p = r12.points[static_cast<size_t>(q)];
    acc += r12.weights[static_cast<size_t>(q)] * std::exp(Complex(0.0, kPi * (p.x() + p.y())));
  }
  const Complex expected = Complex(-4.0 / (kPi * kPi), 0.0);  // ((e^{i pi}-1)/(i pi))^2
  CHECK(std::abs(acc - expected) < 1e-12);

  Box cube;
  cube.lo = Vec(0.0, 0.0, 0.0);
  cube.hi = Vec(1.0, 1.0, 1.0);
  const QuadRule r1 = volume_quadrature(cube, 1, 3);
  CHECK(r1.size() == 1);
  CHECK(r1.points[0] == Vec(0.5, 0.5, 0.5));
  CHECK(r1.weights[0] == doctest::Approx(1.0));
}

TEST_CASE("mapped rules keep positive weights") {
  Box el;
  el.lo = Vec(-2.0, 1.0, 0.5);
  el.hi = Vec(-1.0, 3.0, 2.0);
  const QuadRule rule = volume_quadrature(el, 5, 3);
  for (double w : rule.weights) CHECK(w > 0.0);
  CHECK(rule.measure() == doctest::Approx(1.0 * 2.0 * 1.5));
}
