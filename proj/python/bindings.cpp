#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfid/channels.hpp"
#include "gfid/errors.hpp"
#include "gfid/fidelity.hpp"
#include "gfid/oracle.hpp"
#include "gfid/phase_space.hpp"
#include "gfid/states.hpp"

namespace py = pybind11;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Input-output fidelity of bosonic Gaussian channels";

  auto error = py::register_exception<gfid::Error>(m, "Error");
  py::register_exception<gfid::InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<gfid::SingularMatrix>(m, "SingularMatrix", error.ptr());
  py::register_exception<gfid::InvalidState>(m, "InvalidState", error.ptr());
  py::register_exception<gfid::PreconditionError>(m, "PreconditionError", error.ptr());
  py::register_exception<gfid::UnsupportedDimension>(m, "UnsupportedDimension", error.ptr());
  py::register_exception<gfid::UnsupportedChannel>(m, "UnsupportedChannel", error.ptr());

  py::enum_<gfid::QuadratureOrdering>(m, "QuadratureOrdering")
      .value("interleaved", gfid::QuadratureOrdering::interleaved)
      .value("block", gfid::QuadratureOrdering::block);

  m.def("symplectic_form", &gfid::symplectic_form, py::arg("n"));
  m.def("reorder", py::overload_cast<const gfid::Matrix&, gfid::QuadratureOrdering, gfid::QuadratureOrdering>(
                       &gfid::reorder),
        py::arg("m"), py::arg("src"), py::arg("dst"));
  m.def("min_eig_hermitian", &gfid::min_eig_hermitian, py::arg("h"));
  m.def("spd_solve", &gfid::spd_solve, py::arg("m"), py::arg("v"));
  m.def("sqrt_det", &gfid::sqrt_det, py::arg("m"));

  py::class_<gfid::GaussianState>(m, "GaussianState")
      .def(py::init<gfid::Matrix, gfid::Vector>(), py::arg("covariance"), py::arg("displacement"))
      .def_property_readonly("modes", &gfid::GaussianState::modes)
      .def_property_readonly("covariance", &gfid::GaussianState::covariance)
      .def_property_readonly("displacement", &gfid::GaussianState::displacement)
      .def("is_physical", &gfid::GaussianState::is_physical)
      .def("__repr__", [](const gfid::GaussianState& s) {
        return "<GaussianState modes=" + std::to_string(s.modes()) + ">";
      });

  m.def("vacuum", &gfid::vacuum, py::arg("n") = 1);
  m.def("coherent", &gfid::coherent, py::arg("amplitudes"));
  m.def("two_mode_squeezed", &gfid::two_mode_squeezed, py::arg("r"));
  m.def("squeezed_vacuum", &gfid::squeezed_vacuum, py::arg("r"));
  m.def("purity", &gfid::purity, py::arg("state"));
  m.def("char_function", &gfid::char_function, py::arg("state"), py::arg("eps"));

  py::class_<gfid::GaussianChannel>(m, "GaussianChannel")
      .def(py::init<gfid::Matrix, gfid::Matrix>(), py::arg("A"), py::arg("G"))
      .def_property_readonly("modes", &gfid::GaussianChannel::modes)
      .def_property_readonly("A", &gfid::GaussianChannel::a)
      .def_property_readonly("G", &gfid::GaussianChannel::g);

  py::class_<gfid::ValidityReport>(m, "ValidityReport")
      .def_readonly("paper_condition", &gfid::ValidityReport::paper_condition)
      .def_readonly("cp_condition", &gfid::ValidityReport::cp_condition)
      .def_readonly("g_min_eig", &gfid::ValidityReport::g_min_eig)
      .def_readonly("cp_min_eig", &gfid::ValidityReport::cp_min_eig);

  m.def("apply", &gfid::apply, py::arg("channel"), py::arg("state"));
  m.def("compose", &gfid::compose, py::arg("second"), py::arg("first"));
  m.def("identity_channel", &gfid::identity_channel, py::arg("n") = 1);
  m.def("amplifier", &gfid::amplifier, py::arg("eta"));
  m.def("attenuator", &gfid::attenuator, py::arg("eta"));
  m.def("classical_noise", &gfid::classical_noise, py::arg("G"));
  m.def(
      "memory_channel",
      [](double noise, double correlation) { return gfid::memory_channel({noise, correlation}); },
      py::arg("N"), py::arg("x"));
  m.def("validate", &gfid::validate, py::arg("channel"));

  py::class_<gfid::FidelityResult>(m, "FidelityResult")
      .def_readonly("value", &gfid::FidelityResult::value)
      .def_readonly("det_factor", &gfid::FidelityResult::det_factor)
      .def_readonly("disp_factor", &gfid::FidelityResult::disp_factor)
      .def_readonly("matrix_condition", &gfid::FidelityResult::matrix_condition)
      .def("__float__", [](const gfid::FidelityResult& r) { return r.value; });

  m.def("overlap", &gfid::overlap, py::arg("s1"), py::arg("s2"));
  m.def("channel_fidelity", &gfid::channel_fidelity, py::arg("channel"), py::arg("state"));
  m.def("closed_form_memory", &gfid::closed_form_memory, py::arg("N"), py::arg("x"));
  m.def(
      "memory_bounds",
      [](double noise) {
        const auto b = gfid::memory_bounds(noise);
        return py::make_tuple(b.lower, b.upper);
      },
      py::arg("N"));
  m.def("closed_form_entangled", &gfid::closed_form_entangled, py::arg("N"), py::arg("x"), py::arg("r"));
  m.def("amplifier_max_fidelity", &gfid::amplifier_max_fidelity, py::arg("eta"));

  m.def(
      "quad_fidelity",
      [](const gfid::GaussianChannel& c, const gfid::GaussianState& s, double half_width, int points, int threads) {
        return gfid::quad_fidelity(c, s, {half_width, points}, threads);
      },
      py::arg("channel"), py::arg("state"), py::arg("L") = 8.0, py::arg("m") = 201, py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def(
      "mc_fidelity",
      [](const gfid::GaussianChannel& c, const gfid::GaussianState& s, std::int64_t samples, std::uint64_t seed,
         int threads) {
        const auto est = gfid::mc_fidelity(c, s, {samples, seed}, threads);
        return std::make_pair(est.estimate, est.std_error);
      },
      py::arg("channel"), py::arg("state"), py::arg("samples") = 1'000'000, py::arg("seed") = 0,
      py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());
}
