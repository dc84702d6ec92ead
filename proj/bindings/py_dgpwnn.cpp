#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dgpwnn/planewave.hpp"
#include "dgpwnn/quadrature.hpp"
#include "dgpwnn/runspec.hpp"

namespace py = pybind11;
using namespace dgpwnn;

namespace {

Mesh py_build_mesh(const Eigen::Vector3d& lo, const Eigen::Vector3d& hi,
                   const std::vector<Index>& divisions, int dim) {
  Box box;
  box.lo = lo;
  box.hi = hi;
  std::array<Index, 3> div{1, 1, 1};
  for (size_t a = 0; a < divisions.size() && a < 3; ++a) div[a] = divisions[a];
  return build_uniform_mesh(box, div, dim);
}

}  // namespace

PYBIND11_MODULE(_dgpwnn, m) {
  m.doc() = "Adaptive plane-wave discontinuous Galerkin solver for time-harmonic waves";
  m.attr("__version__") = "0.1.0";

  py::register_exception<InvalidConfig>(m, "InvalidConfigError", PyExc_ValueError);
  py::register_exception<DegenerateSystem>(m, "DegenerateSystemError", PyExc_RuntimeError);
  py::register_exception<DegenerateCandidate>(m, "DegenerateCandidateError", PyExc_RuntimeError);

  m.def(
      "gauss_legendre_1d",
      [](int n) {
        std::vector<double> x, w;
        gauss_legendre_1d(n, x, w);
        return py::make_tuple(x, w);
      },
      py::arg("n"), "Gauss-Legendre nodes and weights on [-1, 1]");

  py::class_<Mesh>(m, "Mesh")
      .def_property_readonly("n_elements", &Mesh::n_elements)
      .def_property_readonly("n_interior_faces", &Mesh::n_interior_faces)
      .def_property_readonly("n_boundary_faces", &Mesh::n_boundary_faces)
      .def_property_readonly("dim", [](const Mesh& mesh) { return mesh.dim; })
      .def_property_readonly("width", [](const Mesh& mesh) { return mesh_width(mesh); });

  m.def("build_uniform_mesh", &py_build_mesh, py::arg("lo"), py::arg("hi"), py::arg("divisions"),
        py::arg("dim"), "Uniform axis-aligned box mesh");

  m.def("direction_vector_2d", &direction_vector_2d, py::arg("d"));
  m.def("direction_vector_3d", &direction_vector_3d, py::arg("zeta"), py::arg("theta"));
  m.def(
      "init_directions",
      [](int dim, Index width, Index n_elements) {
        auto [dirs, clamped] = init_directions(dim, width, n_elements);
        return py::make_tuple(Eigen::MatrixXd(dirs.angles), clamped);
      },
      py::arg("dim"), py::arg("width"), py::arg("n_elements"),
      "Uniform initial angles (one column per element) and the clamp flag");
  m.def(
      "correct_polar_angles",
      [](Eigen::VectorXd zeta, double threshold, double disturbance) {
        correct_polar_angles(zeta, threshold, disturbance);
        return zeta;
      },
      py::arg("zeta"), py::arg("threshold"), py::arg("disturbance"));
  m.def(
      "eval_scalar_wave",
      [](double omega, const Eigen::Vector3d& W, const Eigen::Vector3d& x) {
        auto [v, g] = eval_scalar_wave(omega, W, x);
        return py::make_tuple(v, Eigen::Vector3cd(g));
      },
      py::arg("omega"), py::arg("W"), py::arg("x"));
  m.def(
      "polarization_frame",
      [](const Eigen::Vector3d& W) {
        const PolarizationFrame f = polarization_frame(W);
        return py::make_tuple(Eigen::Vector3d(f.G), Eigen::Vector3d(f.F_high));
      },
      py::arg("W"), "Unit polarization pair (G, G x W) orthogonal to W");

  py::class_<IterationRow>(m, "IterationRow")
      .def_readonly("iteration", &IterationRow::iteration)
      .def_readonly("width", &IterationRow::width)
      .def_readonly("eta", &IterationRow::eta)
      .def_readonly("cond", &IterationRow::cond)
      .def_readonly("err_l2", &IterationRow::err_l2)
      .def_readonly("err_energy", &IterationRow::err_energy)
      .def_readonly("l2_indicator", &IterationRow::l2_indicator)
      .def_readonly("epochs", &IterationRow::epochs);

  py::class_<RunReport>(m, "RunReport")
      .def_readonly("rows", &RunReport::rows)
      .def_property_readonly("status", [](const RunReport& r) { return to_string(r.status); })
      .def_readonly("final_err_l2", &RunReport::final_err_l2)
      .def_readonly("final_err_energy", &RunReport::final_err_energy)
      .def_readonly("exact_l2_norm", &RunReport::exact_l2_norm)
      .def_readonly("exact_energy_norm", &RunReport::exact_energy_norm)
      .def_readonly("final_eta", &RunReport::final_eta)
      .def_readonly("initial_eta", &RunReport::initial_eta)
      .def_readonly("notes", &RunReport::notes);

  m.def("preset_names", &preset_names);
  m.def(
      "run_preset",
      [](const std::string& name, const std::string& out_prefix, std::optional<unsigned int> seed,
         std::optional<int> quad_order, bool dump_system) {
        return run_preset(name, out_prefix, seed, quad_order, dump_system);
      },
      py::arg("name"), py::arg("out_prefix") = "", py::arg("seed") = py::none(),
      py::arg("quad_order") = py::none(), py::arg("dump_system") = false);
  m.def(
      "run_spec",
      [](const std::string& json_text) { return execute(parse_spec(json_text)); },
      py::arg("json_text"), "Run from a JSON spec document (see README for the schema)");
}
