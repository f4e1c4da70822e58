// Python module: thin wrappers that take and return numpy arrays and plain dicts.

#include "kdwork/circuit_parser.hpp"
#include "kdwork/decomposition.hpp"
#include "kdwork/error.hpp"
#include "kdwork/figures.hpp"
#include "kdwork/json_io.hpp"
#include "kdwork/sweep.hpp"
#include "kdwork/thermo.hpp"
#include "kdwork/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <bit>
#include <sstream>

namespace py = pybind11;
using namespace kdwork;

namespace {

using ComplexArray = py::array_t<complex_t, py::array::c_style | py::array::forcecast>;

CMatrix to_matrix(const ComplexArray &a) {
  if (a.ndim() != 2) throw InvalidArgument("expected a 2-D array");
  const auto r = static_cast<std::size_t>(a.shape(0)), c = static_cast<std::size_t>(a.shape(1));
  return CMatrix(r, c, std::vector<complex_t>(a.data(), a.data() + r * c));
}

py::array_t<complex_t> to_array(const CMatrix &m) {
  py::array_t<complex_t> out({m.rows(), m.cols()});
  std::copy(m.entries().begin(), m.entries().end(), out.mutable_data());
  return out;
}

Hamiltonian hamiltonian_for(std::size_t dim, double energy_scale) {
  if (dim < 2 || !std::has_single_bit(dim)) throw InvalidArgument("dimension must be a power of two");
  return build_hamiltonian(std::countr_zero(dim), energy_scale);
}

py::object json_to_py(const nlohmann::json &j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

py::dict circuit_info(const CircuitFile &f) {
  py::dict d;
  d["num_qubits"] = f.circuit.num_qubits;
  d["energy_scale"] = f.energy_scale;
  d["unitary"] = to_array(circuit_unitary(f.circuit));
  d["state"] = to_array(f.initial_state().matrix());
  std::vector<std::string> names;
  for (const auto &g : f.circuit.gates) names.push_back(gate_name(g));
  d["gates"] = names;
  d["warnings"] = f.warnings;
  return d;
}

py::tuple sweep_result(const SweepResult &r) { return py::make_tuple(r.header, r.rows); }

} // namespace

PYBIND11_MODULE(_kdwork, m) {
  m.doc() = "Kirkwood-Dirac quasiprobability work statistics for qubit circuits";

  // InvalidArgument derives from std::invalid_argument and arrives as ValueError.
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  m.def("hamiltonian_eigenvalues",
        [](int num_qubits, double energy_scale) { return build_hamiltonian(num_qubits, energy_scale).eigenvalues; },
        py::arg("num_qubits"), py::arg("energy_scale") = 1.0);

  m.def("qubit_state", [](double p, double gamma_abs, double gamma_phase) {
    return to_array(qubit_state({p, gamma_abs, gamma_phase}).matrix());
  }, py::arg("p"), py::arg("gamma_abs"), py::arg("gamma_phase"));
  m.def("pure_state_bloch", [](double theta, double phi) { return to_array(pure_state_bloch(theta, phi).matrix()); },
        py::arg("theta"), py::arg("phi"));

  m.def("kdq", [](const ComplexArray &u, const ComplexArray &rho, double energy_scale) {
    const CMatrix um = to_matrix(u);
    return to_array(kdq_table(um, DensityMatrix(to_matrix(rho)), hamiltonian_for(um.rows(), energy_scale)).entries);
  }, py::arg("u"), py::arg("rho"), py::arg("energy_scale") = 1.0,
        "KDQ table q[i, f] of unitary u on state rho (storage basis, index 0 = down).");

  m.def("work", [](const ComplexArray &u, const ComplexArray &rho, double energy_scale) {
    const CMatrix um = to_matrix(u);
    return json_to_py(to_json(work_report(um, DensityMatrix(to_matrix(rho)), hamiltonian_for(um.rows(), energy_scale))));
  }, py::arg("u"), py::arg("rho"), py::arg("energy_scale") = 1.0);

  m.def("jarzynski", [](const ComplexArray &u, const ComplexArray &rho, double beta, double energy_scale,
                        bool allow_non_gibbs) {
    const CMatrix um = to_matrix(u);
    const auto r = jarzynski(um, DensityMatrix(to_matrix(rho)), beta, hamiltonian_for(um.rows(), energy_scale),
                             allow_non_gibbs);
    return py::make_tuple(r.expectation, r.gamma_correction);
  }, py::arg("u"), py::arg("rho"), py::arg("beta"), py::arg("energy_scale") = 1.0,
        py::arg("allow_non_gibbs") = false);

  m.def("parse_circuit", [](const std::string &text) { return circuit_info(parse_circuit(text)); },
        py::arg("text"));

  m.def("decompose", [](const std::string &text, bool screen) {
    const auto f = parse_circuit(text);
    const auto h = f.hamiltonian();
    nlohmann::json j = to_json(decomposition_identity(f.circuit, f.initial_state(), h));
    if (screen) j["commutation"] = to_json(commutation_screen(f.circuit, h));
    return json_to_py(j);
  }, py::arg("text"), py::arg("screen") = false);

  m.def("sweep", [](const std::string &tmpl, const std::vector<std::pair<std::string, std::vector<double>>> &axes,
                    const std::vector<std::string> &columns, const std::map<std::string, double> &fixed) {
    SweepSpec spec;
    for (const auto &[name, values] : axes) spec.axes.push_back(SweepAxis{name, values});
    spec.columns = columns;
    spec.fixed = fixed;
    return sweep_result(run_sweep(tmpl, spec));
  }, py::arg("template"), py::arg("axes"), py::arg("columns"), py::arg("fixed") = std::map<std::string, double>{},
        "Returns (header, rows). axes is a list of (name, values) pairs, first varies slowest.");

  m.def("figure", [](const std::string &id) { return sweep_result(run_figure(id)); }, py::arg("id"));
  m.def("figure_ids", &figure_ids);

  m.def("verify", [](std::size_t draws, std::uint64_t seed) {
    const auto r = run_verify(draws, seed);
    py::list checks;
    for (const auto &c : r.checks) {
      py::dict d;
      d["name"] = c.name;
      d["passed"] = c.passed;
      d["max_error"] = c.max_error;
      d["tolerance"] = c.tolerance;
      checks.append(d);
    }
    return py::make_tuple(r.all_passed(), checks);
  }, py::arg("draws") = 100, py::arg("seed") = 0);
}
