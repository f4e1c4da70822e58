#pragma once

// Gate set and circuits. A circuit lists gates in application order: gates[0]
// acts first, so the circuit unitary is U_N ... U_2 U_1.

#include "kdwork/linalg.hpp"

#include <array>
#include <string>
#include <variant>
#include <vector>

namespace kdwork {

struct HadamardGate {
  int target = 0;

  bool operator==(const HadamardGate &) const = default;
};

/// |up><up| + e^{i phi}|down><down|. T is PhaseGate{q, pi/4}.
struct PhaseGate {
  int target = 0;
  double phi = 0.0;

  bool operator==(const PhaseGate &) const = default;
};

/// Flips the target when the control is |down>.
struct CnotGate {
  int control = 0;
  int target = 1;

  bool operator==(const CnotGate &) const = default;
};

/// cos(theta/2) I - i sin(theta/2) n.sigma
struct RotationGate {
  int target = 0;
  double theta = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 1.0};

  bool operator==(const RotationGate &) const = default;
};

/// Arbitrary unitary on `targets`; targets[0] is the slow index of `matrix`.
struct CustomGate {
  std::vector<int> targets;
  CMatrix matrix;

  bool operator==(const CustomGate &) const = default;
};

using Gate = std::variant<HadamardGate, PhaseGate, CnotGate, RotationGate, CustomGate>;

struct Circuit {
  int num_qubits = 1;
  std::vector<Gate> gates;

  bool operator==(const Circuit &) const = default;
};

Gate make_t(int target);
/// Normalizes the axis; returns a warning message when |n| was off by more than 1e-6.
RotationGate make_rotation(int target, double theta, std::array<double, 3> axis,
                           std::string *warning = nullptr);
/// Validates unitarity (1e-10) and the matrix size against the target count.
CustomGate make_custom(std::vector<int> targets, CMatrix matrix);

/// 2x2 (or 4x4 for CNOT, 2^k for custom) matrix of the gate on its own qubits.
CMatrix local_matrix(const Gate &g);
/// Embedding into the 2^L-dimensional space.
CMatrix gate_matrix(const Gate &g, int num_qubits);
std::string gate_name(const Gate &g);

CMatrix circuit_unitary(const Circuit &c);
/// Product of the first j gates (identity for j = 0).
CMatrix prefix_unitary(const Circuit &c, std::size_t j);
/// Product of the last N-j gates (identity for j = N).
CMatrix suffix_unitary(const Circuit &c, std::size_t j);

/// Builds a one-qubit circuit from an operator word such as "HTH" written
/// right-to-left: the rightmost letter acts first. Letters: H, T.
Circuit circuit_from_operator_word(const std::string &word);

// Fixed single-qubit matrices in the storage basis.
CMatrix pauli_x();
CMatrix pauli_y();
CMatrix pauli_z();
CMatrix hadamard();
CMatrix phase_gate(double phi);
CMatrix cnot_matrix();
CMatrix rotation_matrix(double theta, const std::array<double, 3> &axis);

} // namespace kdwork
