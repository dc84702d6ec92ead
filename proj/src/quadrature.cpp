#include "dgpwnn/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace dgpwnn {

double QuadRule::measure() const {
  double m = 0.0;
  for (double w : weights) m += w;
  return m;
}

void gauss_legendre_1d(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  if (n < 1 || n > 64) throw InvalidConfig("gauss_legendre_1d: n out of range [1,64]");
  nodes.assign(static_cast<size_t>(n), 0.0);
  weights.assign(static_cast<size_t>(n), 0.0);

  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th root.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    nodes[static_cast<size_t>(i)] = -z;
    nodes[static_cast<size_t>(n - 1 - i)] = z;
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    weights[static_cast<size_t>(i)] = w;
    weights[static_cast<size_t>(n - 1 - i)] = w;
  }
}

namespace {

// Map the reference rule to [lo,hi].
void mapped_1d(int order, double lo, double hi, std::vector<double>& x, std::vector<double>& w) {
  std::vector<double> xn, wn;
  gauss_legendre_1d(order, xn, wn);
  x.resize(xn.size());
  w.resize(wn.size());
  const double c = 0.5 * (lo + hi), s = 0.5 * (hi - lo);
  for (size_t i = 0; i < xn.size(); ++i) {
    x[i] = c + s * xn[i];
    w[i] = s * wn[i];
  }
}

}  // namespace

QuadRule face_quadrature(const Face& face, int order, int dim) {
  QuadRule rule;
  // Free axes of the facet.
  std::vector<int> free_axes;
  for (int a = 0; a < dim; ++a)
    if (a != face.axis) free_axes.push_back(a);

  if (free_axes.size() == 1) {
    const int a = free_axes[0];
    std::vector<double> x, w;
    mapped_1d(order, face.extent.lo[a], face.extent.hi[a], x, w);
    for (size_t i = 0; i < x.size(); ++i) {
      Vec p = Vec::Zero();
      p[face.axis] = face.coord;
      p[a] = x[i];
      rule.points.push_back(p);
      rule.weights.push_back(w[i]);
    }
  } else {
    const int a0 = free_axes[0], a1 = free_axes[1];
    std::vector<double> x0, w0, x1, w1;
    mapped_1d(order, face.extent.lo[a0], face.extent.hi[a0], x0, w0);
    mapped_1d(order, face.extent.lo[a1], face.extent.hi[a1], x1, w1);
    for (size_t i = 0; i < x0.size(); ++i)
      for (size_t j = 0; j < x1.size(); ++j) {
        Vec p = Vec::Zero();
        p[face.axis] = face.coord;
        p[a0] = x0[i];
        p[a1] = x1[j];
        rule.points.push_back(p);
        rule.weights.push_back(w0[i] * w1[j]);
      }
  }
  return rule;
}

QuadRule volume_quadrature(const Box& element, int order, int dim) {
  std::vector<std::vector<double>> x(static_cast<size_t>(dim)), w(static_cast<size_t>(dim));
  for (int a = 0; a < dim; ++a)
    mapped_1d(order, element.lo[a], element.hi[a], x[static_cast<size_t>(a)], w[static_cast<size_t>(a)]);

  QuadRule rule;
  if (dim == 2) {
    for (size_t i = 0; i < x[0].size(); ++i)
      for (size_t j = 0; j < x[1].size(); ++j) {
        rule.points.push_back(Vec(x[0][i], x[1][j], 0.0));
        rule.weights.push_back(w[0][i] * w[1][j]);
      }
  } else {
    for (size_t i = 0; i < x[0].size(); ++i)
      for (size_t j = 0; j < x[1].size(); ++j)
        for (size_t k = 0; k < x[2].size(); ++k) {
          rule.points.push_back(Vec(x[0][i], x[1][j], x[2][k]));
          rule.weights.push_back(w[0][i] * w[1][j] * w[2][k]);
        }
  }
  return rule;
}

int default_quad_order(double omega, double h) {
  const int osc = static_cast<int>(std::ceil(omega * h / std::numbers::pi)) + 6;
  return std::max(10, osc);
}

}  // namespace dgpwnn
