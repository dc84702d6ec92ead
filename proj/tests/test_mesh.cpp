#include <doctest.h>

#include <cmath>

#include "dgpwnn/mesh.hpp"

using namespace dgpwnn;

TEST_CASE("unit square 2x2") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 2, 2);
  CHECK(mesh.n_elements() == 4);
  CHECK(mesh.n_interior_faces() == 4);
  CHECK(mesh.n_boundary_faces() == 8);
  CHECK(mesh_width(mesh) == doctest::Approx(0.5));
}

TEST_CASE("unit cube 2x2x2") {
  const Mesh mesh = build_uniform_mesh_3d(0.0, 1.0, 2, 2, 2);
  CHECK(mesh.n_elements() == 8);
  CHECK(mesh.n_interior_faces() == 12);
  CHECK(mesh.n_boundary_faces() == 24);
}

TEST_CASE("single element") {
  const Mesh mesh = build_uniform_mesh_2d(0.0, 1.0, 1, 1);
  CHECK(mesh.n_elements() == 1);
  CHECK(mesh.n_interior_faces() == 0);
  CHECK(mesh.n_boundary_faces() == 4);
}

TEST_CASE("mesh width takes the max edge") {
  Box b;
  b.lo = Vec(0.0, 0.0, 0.0);
  b.hi = Vec(1.0, 1.0, 0.0);
  const Mesh mesh = build_uniform_mesh(b, {4, 2, 1}, 2);
  CHECK(mesh_width(mesh) == doctest::Approx(0.5));

  const Mesh cube = build_uniform_mesh_3d(-0.5, 0.5, 2, 2, 2);
  CHECK(mesh_width(cube) == doctest::Approx(0.5));
}

TEST_CASE("invalid configurations are rejected") {
  Box b;
  b.lo = Vec(0.0, 0.0, 0.0);
  b.hi = Vec(1.0, 1.0, 0.0);
  CHECK_THROWS_AS(build_uniform_mesh(b, {0, 2, 1}, 2), InvalidConfig);
  Box degenerate;
  degenerate.lo = Vec(0.0, 0.0, 0.0);
  degenerate.hi = Vec(1.0, 0.0, 0.0);
  CHECK_THROWS_AS(build_uniform_mesh(degenerate, {2, 2, 1}, 2), InvalidConfig);
}

TEST_CASE("elements tile the domain and faces are consistent") {
  for (int dim : {2, 3}) {
    const Mesh mesh = dim == 2 ? build_uniform_mesh_2d(-0.25, 1.5, 3, 2)
                               : build_uniform_mesh_3d(-0.25, 1.5, 3, 2, 2);
    double volume = 0.0;
    for (const auto& el : mesh.elements) {
      double v = 1.0;
      for (int a = 0; a < dim; ++a) v *= el.extent(a);
      volume += v;
    }
    double domain_volume = 1.0;
    for (int a = 0; a < dim; ++a) domain_volume *= mesh.domain.extent(a);
    CHECK(volume == doctest::Approx(domain_volume));

    // Boundary face measures sum to the domain surface measure.
    double surface = 0.0;
    for (const auto& f : mesh.faces) {
      if (f.is_interior()) continue;
      double s = 1.0;
      for (int a = 0; a < dim; ++a)
        if (a != f.axis) s *= f.extent.extent(a);
      surface += s;
    }
    double expected_surface = 0.0;
    for (int a = 0; a < dim; ++a) {
      double side = 1.0;
      for (int b = 0; b < dim; ++b)
        if (b != a) side *= mesh.domain.extent(b);
      expected_surface += 2.0 * side;
    }
    CHECK(surface == doctest::Approx(expected_surface));

    for (const auto& f : mesh.faces) {
      CHECK(f.normal.norm() == doctest::Approx(1.0));
      if (f.is_interior()) {
        CHECK(f.owner < f.neighbor);  // k < j orientation
        CHECK(f.normal[f.axis] == doctest::Approx(1.0));
      }
      // Face geometry lies on its owner's boundary.
      const Box& own = mesh.elements[static_cast<size_t>(f.owner)];
      const bool on_lo = std::abs(f.coord - own.lo[f.axis]) < 1e-14;
      const bool on_hi = std::abs(f.coord - own.hi[f.axis]) < 1e-14;
      CHECK((on_lo || on_hi));
    }

    // Interior faces appear exactly once per element pair.
    Index expected_interior = 0;
    const auto& d = mesh.divisions;
    if (dim == 2) {
      expected_interior = (d[0] - 1) * d[1] + d[0] * (d[1] - 1);
    } else {
      expected_interior =
          (d[0] - 1) * d[1] * d[2] + d[0] * (d[1] - 1) * d[2] + d[0] * d[1] * (d[2] - 1);
    }
    CHECK(mesh.n_interior_faces() == expected_interior);
  }
}
