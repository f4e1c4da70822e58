#pragma once

// Line-oriented circuit files:
//
//   qubits 2
//   E 1.0
//   state product pure_bloch pi/2 $phi ; pure_bloch pi/2 $phi
//   gate H 0
//   gate CNOT 0 1
//
// Real fields accept numbers, `pi`, parentheses and + - * /.
// Complex entries are written a+bi. `#` starts a comment.

#include "kdwork/gates.hpp"
#include "kdwork/system.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace kdwork {

struct StateSpec {
  enum class Kind { PureBloch, PurePop, Qubit, Thermal, Product, Matrix };
  Kind kind = Kind::PureBloch;
  std::vector<double> args;
  std::vector<StateSpec> parts;     // Product
  std::vector<complex_t> entries;   // Matrix, row-major

  bool operator==(const StateSpec &) const = default;
};

struct CircuitFile {
  Circuit circuit;
  double energy_scale = 1.0;
  StateSpec state;
  std::vector<std::string> warnings;

  Hamiltonian hamiltonian() const;
  DensityMatrix initial_state() const;

  bool operator==(const CircuitFile &o) const {
    return circuit == o.circuit && energy_scale == o.energy_scale && state == o.state;
  }
};

/// Throws ParseError for syntax problems and ValidationError (with the line in
/// the message) for non-unitary gates or invalid states.
CircuitFile parse_circuit(std::string_view text);
std::string serialize_circuit(const CircuitFile &file);

/// Replaces every `$name` outside comments; an unknown name is a ParseError.
std::string substitute_placeholders(std::string_view text,
                                    const std::map<std::string, double> &values);
/// Names of all `$name` placeholders outside comments, in first-use order.
std::vector<std::string> placeholder_names(std::string_view text);

/// Real expression grammar used for numeric fields. Throws InvalidArgument.
double parse_real_expression(std::string_view token);
/// a, bi, a+bi, a-bi, i, -i. Throws InvalidArgument.
complex_t parse_complex_literal(std::string_view token);
std::string format_real(double x);
std::string format_complex(complex_t z);

DensityMatrix build_state(const StateSpec &spec, const Hamiltonian &h);

} // namespace kdwork
