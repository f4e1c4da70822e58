#include "support.hpp"

#include "kdwork/circuit_parser.hpp"
#include "kdwork/error.hpp"

#include <doctest.h>

#include <numbers>

using namespace kdwork;

namespace {

constexpr double kPi = std::numbers::pi;

ParseError parse_error_of(const std::string &text) {
  try {
    parse_circuit(text);
  } catch (const ParseError &e) {
    return e;
  }
  FAIL("expected a ParseError for:\n" << text);
  return ParseError("", 0, 0);
}

StateSpec random_single_spec(Rng &rng) {
  StateSpec s;
  switch (rng.integer(0, 3)) {
  case 0:
    s.kind = StateSpec::Kind::PureBloch;
    s.args = {rng.uniform(0, kPi), rng.uniform(-kPi, kPi)};
    break;
  case 1:
    s.kind = StateSpec::Kind::PurePop;
    s.args = {rng.uniform(), rng.uniform(-kPi, kPi)};
    break;
  case 2: {
    const auto p = random_qubit_params(rng);
    s.kind = StateSpec::Kind::Qubit;
    s.args = {p.p, p.gamma_abs * 0.999, p.gamma_phase};
    break;
  }
  default:
    s.kind = StateSpec::Kind::Thermal;
    s.args = {rng.uniform(-3, 3)};
  }
  return s;
}

CircuitFile random_file(Rng &rng) {
  CircuitFile f;
  const int l = rng.integer(1, 3);
  f.energy_scale = rng.uniform(0.1, 3.0);
  f.circuit = random_circuit(rng, l, static_cast<std::size_t>(rng.integer(0, 5)));
  if (rng.uniform() < 0.3) {
    // a two-qubit custom gate
    if (l >= 2) f.circuit.gates.push_back(make_custom({1, 0}, random_unitary(rng, 4)));
  }
  const int pick = rng.integer(0, 2);
  if (pick == 0 && l >= 2) {
    f.state.kind = StateSpec::Kind::Product;
    for (int q = 0; q < l; ++q) {
      auto part = random_single_spec(rng);
      f.state.parts.push_back(part);
    }
  } else if (pick == 1) {
    const auto rho = random_state(rng, std::size_t{1} << l);
    f.state.kind = StateSpec::Kind::Matrix;
    f.state.entries.assign(rho.matrix().entries().begin(), rho.matrix().entries().end());
  } else {
    f.state.kind = StateSpec::Kind::Thermal;
    f.state.args = {rng.uniform(-2, 2)};
  }
  return f;
}

} // namespace

TEST_CASE("parse a complete file") {
  const auto f = parse_circuit(R"(# comment line
qubits 2
E 0.5   # trailing comment
state product pure_bloch pi/2 pi/4 ; qubit 0.3 0.1 -pi
gate H 0
gate T 1
gate P 0 2*pi/3
gate CNOT 1 0
gate R 1 0.3 0 1 0
gate U 0 0 1 1 0
)");
  CHECK(f.circuit.num_qubits == 2);
  CHECK(f.energy_scale == 0.5);
  REQUIRE(f.circuit.gates.size() == 6);
  CHECK(std::get<PhaseGate>(f.circuit.gates[1]).phi == doctest::Approx(kPi / 4));
  CHECK(std::get<PhaseGate>(f.circuit.gates[2]).phi == doctest::Approx(2 * kPi / 3));
  CHECK(std::get<CnotGate>(f.circuit.gates[3]) == CnotGate{1, 0});
  CHECK(std::get<CustomGate>(f.circuit.gates[5]).matrix == CMatrix{{0, 1}, {1, 0}});
  CHECK(f.state.kind == StateSpec::Kind::Product);
  const auto rho = f.initial_state();
  CHECK(max_abs_diff(rho.matrix(), product_state(pure_state_bloch(kPi / 2, kPi / 4),
                                                 qubit_state({0.3, 0.1, -kPi}))
                                       .matrix()) <= 1e-15);
}

TEST_CASE("parse errors carry line and column") {
  auto e = parse_error_of("qubits 2\nstate thermal 1\ngate H 0\ngate CNOT 0 0\n");
  CHECK(e.line() == 4);
  CHECK(e.column() == 13);
  CHECK(std::string(e.what()).find("control equals target") != std::string::npos);

  e = parse_error_of("qubits 1\nstate thermal 1\ngate H 1\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 8);

  e = parse_error_of("qubits 1\nstate thermal 1\ngate Q 0\n");
  CHECK(e.column() == 6);

  e = parse_error_of("qubits 1\nstate pure_bloch 1 2x\n");
  CHECK(e.line() == 2);
  CHECK(e.column() == 20);

  e = parse_error_of("qubits 1\ngate H 0\n");
  CHECK(std::string(e.what()).find("state") != std::string::npos);

  e = parse_error_of("state thermal 1\ngate H 0\n");
  CHECK(e.line() == 2);

  e = parse_error_of("qubits 11\nstate thermal 1\n");
  CHECK(e.column() == 8);

  e = parse_error_of("qubits 1\nstate thermal 1\nfoo 3\n");
  CHECK(e.line() == 3);
  CHECK(e.column() == 1);

  e = parse_error_of("qubits 1\nstate thermal 1\ngate R 0 1 0 0 0\n");
  CHECK(e.line() == 3);

  e = parse_error_of("qubits 1\nstate thermal 1\ngate U 0 1 0 0\n");
  CHECK(e.line() == 3);

  e = parse_error_of("qubits 1\nE -1\nstate thermal 1\n");
  CHECK(e.line() == 2);

  e = parse_error_of("qubits 1\nstate thermal $beta\n");
  CHECK(e.line() == 2);
}

TEST_CASE("physically invalid content is a validation error with the line") {
  try {
    parse_circuit("qubits 1\nstate thermal 1\ngate U 0 1 1 0 1\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  try {
    parse_circuit("qubits 1\n\nstate qubit 0.5 0.7 0\n");
    FAIL("expected ValidationError");
  } catch (const ValidationError &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  // state dimension must match the qubit count
  CHECK_THROWS_AS(parse_circuit("qubits 2\nstate pure_bloch 1 1\n"), ValidationError);
}

TEST_CASE("rotation axis warning") {
  const auto f = parse_circuit("qubits 1\nstate thermal 1\ngate R 0 1 0 0 2\n");
  REQUIRE(f.warnings.size() == 1);
  CHECK(f.warnings[0].find("line 3") != std::string::npos);
}

TEST_CASE("real expressions") {
  CHECK(parse_real_expression("pi") == kPi);
  CHECK(parse_real_expression("-pi/2") == -kPi / 2);
  CHECK(parse_real_expression("2*(1+3)/4") == 2.0);
  CHECK(parse_real_expression("1e-3") == 1e-3);
  CHECK(parse_real_expression("-(-0.5)") == 0.5);
  CHECK(parse_real_expression("2.5E+2") == 250.0);
  CHECK_THROWS_AS(parse_real_expression(""), InvalidArgument);
  CHECK_THROWS_AS(parse_real_expression("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_real_expression("(1"), InvalidArgument);
  CHECK_THROWS_AS(parse_real_expression("pie"), InvalidArgument);
}

TEST_CASE("complex literals") {
  CHECK(parse_complex_literal("1.5") == complex_t(1.5, 0));
  CHECK(parse_complex_literal("i") == complex_t(0, 1));
  CHECK(parse_complex_literal("-i") == complex_t(0, -1));
  CHECK(parse_complex_literal("2i") == complex_t(0, 2));
  CHECK(parse_complex_literal("0.5-0.25i") == complex_t(0.5, -0.25));
  CHECK(parse_complex_literal("1e-3+2e-3i") == complex_t(1e-3, 2e-3));
  CHECK(parse_complex_literal("(-0.5)+(-0.5)i") == complex_t(-0.5, -0.5));
  CHECK_THROWS_AS(parse_complex_literal("1+"), InvalidArgument);
  CHECK_THROWS_AS(parse_complex_literal("j"), InvalidArgument);
  for (complex_t z : {complex_t(0.1, -0.2), complex_t(-1e-300, 3), complex_t(0, 0), complex_t(-2, 0)})
    CHECK(parse_complex_literal(format_complex(z)) == z);
}

TEST_CASE("placeholders") {
  const std::string tmpl = "qubits 1  # $ignored\nstate pure_bloch $theta $phi\ngate P 0 -$phi\n";
  CHECK(placeholder_names(tmpl) == std::vector<std::string>{"theta", "phi"});
  const auto text = substitute_placeholders(tmpl, {{"theta", 1.0}, {"phi", -0.5}});
  const auto f = parse_circuit(text);
  CHECK(f.state.args == std::vector<double>{1.0, -0.5});
  CHECK(std::get<PhaseGate>(f.circuit.gates[0]).phi == 0.5);
  CHECK(text.find("# $ignored") != std::string::npos);
  try {
    substitute_placeholders(tmpl, {{"theta", 1.0}});
    FAIL("expected ParseError");
  } catch (const ParseError &e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 25);
  }
}

TEST_CASE("serialize then parse is a fixed point on random files") {
  Rng rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const CircuitFile f = random_file(rng);
    const std::string text = serialize_circuit(f);
    const CircuitFile g = parse_circuit(text);
    CHECK_MESSAGE(g == f, text);
    CHECK(serialize_circuit(g) == text);
  }
}

TEST_CASE("T gates serialize as T") {
  CircuitFile f;
  f.circuit = Circuit{1, {make_t(0), PhaseGate{0, 0.25}}};
  f.state.kind = StateSpec::Kind::Thermal;
  f.state.args = {1.0};
  const auto text = serialize_circuit(f);
  CHECK(text.find("gate T 0") != std::string::npos);
  CHECK(text.find("gate P 0 0.25") != std::string::npos);
}
