#include "support.hpp"

#include "kdwork/decomposition.hpp"
#include "kdwork/gates.hpp"
#include "kdwork/json_io.hpp"
#include "kdwork/thermo.hpp"

#include <doctest.h>

#include <numbers>

using namespace kdwork;

TEST_CASE("KDQ table JSON") {
  const auto h = build_hamiltonian(1, 1.0);
  const auto rho = qubit_state({0.3, 0.2, 0.7});
  const auto t = kdq_table(hadamard(), rho, h);
  const auto j = to_json(t);
  CHECK(j["dim"] == 2);
  CHECK(j["entries"][1][0]["re"].get<double>() == t(1, 0).real());
  CHECK(j["entries"][1][0]["im"].get<double>() == t(1, 0).imag());
  CHECK(j["row_marginals"][1].get<double>() == doctest::Approx(0.3));
  // round-trips through text
  CHECK(nlohmann::json::parse(dump_json(j, 2)) == j);
}

TEST_CASE("single-line output") {
  const auto j = to_json(work_report(hadamard(), qubit_state({0.5, 0.5, std::numbers::pi}),
                                     build_hamiltonian(1, 1.0)));
  const auto s = dump_json(j, 0);
  CHECK(s.find('\n') == std::string::npos);
  CHECK(j["norms"].is_null());
  CHECK(j["total"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("two-qubit work report and decomposition JSON") {
  const auto h = build_hamiltonian(2, 1.0);
  const Circuit c{2, {HadamardGate{0}, CnotGate{0, 1}}};
  const auto rho = product_state(pure_state_bloch(1.0, 0.5), pure_state_bloch(2.0, 1.5));
  const auto w = to_json(work_report(circuit_unitary(c), rho, h));
  CHECK(w["components"].contains("0-3"));
  CHECK(w["norms"].contains("neg_up"));
  const auto d = to_json(decomposition_identity(c, rho, h));
  CHECK(d["per_gate"].size() == 2);
  CHECK(d["per_gate"][1]["j"] == 1);
  const auto s = to_json(commutation_screen(c, h));
  CHECK(s["checks"].size() == 2);
  CHECK(s["conditions"][0]["label"].get<std::string>().find("Pi_i") != std::string::npos);
}
