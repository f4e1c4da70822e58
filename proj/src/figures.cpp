#include "kdwork/figures.hpp"

#include "kdwork/error.hpp"

#include <numbers>

namespace kdwork {

namespace {

constexpr double kPi = std::numbers::pi;

const char *kHadamardEvolution = R"(# Hadamard-like evolution exp(-i omega t n.sigma), n = (1, 0, 1)/sqrt2
qubits 1
E 1
state STATE
gate R 0 2*$omega_t 0.70710678118654757 0 0.70710678118654757
)";

const char *kHth = R"(qubits 1
E 1
state pure_bloch $theta $phi
gate H 0
gate T 0
gate H 0
)";

// H (x) H as one gate, then CNOT.
const char *kCnotHh = R"(qubits 2
E 1
state STATE
gate U 0 1 0.5 -0.5 -0.5 0.5 -0.5 -0.5 0.5 0.5 -0.5 0.5 -0.5 0.5 0.5 0.5 0.5 0.5
gate CNOT 0 1
)";

std::string with_state(const char *tmpl, const std::string &state) {
  std::string s = tmpl;
  s.replace(s.find("STATE"), 5, state);
  return s;
}

const std::vector<std::string> kTwoQubitColumns{
    "re_q_0_1", "re_q_0_2", "re_q_0_3", "re_q_1_3", "re_q_2_3",
    "re_q_1_0", "re_q_2_0", "re_q_3_0", "re_q_3_1", "re_q_3_2",
    "work", "work_pop", "work_coh",
    "w_0_1", "w_0_2", "w_0_3", "w_1_3", "w_2_3",
    "norm_pos_up", "norm_neg_up", "norm_pos_down", "norm_neg_down"};

} // namespace

std::vector<std::string> figure_ids() { return {"2a", "2b", "3", "4", "5"}; }

FigureRecipe figure_recipe(const std::string &id) {
  FigureRecipe r;
  r.id = id;
  const std::vector<std::string> evolution_columns{"re_q_0_1", "re_qpop_0_1", "re_qcoh_0_1",
                                                   "work", "work_pop", "work_coh"};
  if (id == "2a") {
    r.description = "Hadamard-like evolution, p = 1/2, |gamma| = 1/2, coherence phase phi";
    r.circuit_template = with_state(kHadamardEvolution, "qubit 0.5 0.5 $phi");
    r.spec.axes = {SweepAxis{"phi", {0.0, kPi / 4, kPi / 2, 3 * kPi / 4, kPi}},
                   SweepAxis::linspace("omega_t", 0.0, kPi, 181)};
    r.spec.columns = evolution_columns;
  } else if (id == "2b") {
    r.description = "Hadamard-like evolution, pure state with population p and coherence phase pi/2";
    r.circuit_template = with_state(kHadamardEvolution, "pure_pop $p -pi/2");
    r.spec.axes = {SweepAxis::linspace("p", 0.0, 0.5, 6),
                   SweepAxis::linspace("omega_t", 0.0, kPi, 181)};
    r.spec.columns = evolution_columns;
  } else if (id == "3") {
    r.description = "H T H on the pure state cos(theta/2)|down> + e^{i phi} sin(theta/2)|up>";
    r.circuit_template = kHth;
    r.spec.axes = {SweepAxis::linspace("theta", 0.0, kPi, 61),
                   SweepAxis::linspace("phi", 0.0, 2 * kPi, 121)};
    r.spec.columns = {"re_q_0_1", "re_q_1_0", "work", "work_coh"};
  } else if (id == "4") {
    r.description = "CNOT (H x H) on two copies of cos(theta/2)|down> + e^{i phi} sin(theta/2)|up>";
    r.circuit_template =
        with_state(kCnotHh, "product pure_bloch $theta $phi ; pure_bloch $theta $phi");
    r.spec.axes = {SweepAxis::linspace("theta", 0.0, kPi, 61),
                   SweepAxis::linspace("phi", 0.0, 2 * kPi, 121)};
    r.spec.columns = kTwoQubitColumns;
  } else if (id == "5") {
    r.description = "CNOT (H x H) on two copies of (|up> + e^{i phi}|down>)/sqrt2";
    r.circuit_template = with_state(kCnotHh, "product pure_pop 0.5 $phi ; pure_pop 0.5 $phi");
    r.spec.axes = {SweepAxis::linspace("phi", 0.0, 2 * kPi, 721)};
    r.spec.columns = kTwoQubitColumns;
    for (const char *c : {"re_constituent_0_0_1", "re_constituent_0_0_2", "re_constituent_0_0_3",
                          "re_constituent_0_1_3", "re_constituent_0_2_3", "re_constituent_1_0_1",
                          "re_correction_0_1"}) {
      r.spec.columns.push_back(c);
    }
  } else {
    throw InvalidArgument("unknown figure '" + id + "' (expected 2a, 2b, 3, 4 or 5)");
  }
  return r;
}

SweepResult run_figure(const std::string &id) {
  const FigureRecipe r = figure_recipe(id);
  return run_sweep(r.circuit_template, r.spec);
}

} // namespace kdwork
