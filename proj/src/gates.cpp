#include "kdwork/gates.hpp"

#include "kdwork/error.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace kdwork {

namespace {

constexpr complex_t kI{0.0, 1.0};

template <class... Ts> struct overloaded : Ts... {
  using Ts::operator()...;
};

std::vector<int> gate_targets(const Gate &g) {
  return std::visit(overloaded{
                        [](const HadamardGate &h) { return std::vector<int>{h.target}; },
                        [](const PhaseGate &p) { return std::vector<int>{p.target}; },
                        [](const CnotGate &c) { return std::vector<int>{c.control, c.target}; },
                        [](const RotationGate &r) { return std::vector<int>{r.target}; },
                        [](const CustomGate &u) { return u.targets; },
                    },
                    g);
}

} // namespace

CMatrix pauli_x() { return {{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix pauli_y() { return {{0.0, kI}, {-kI, 0.0}}; }
CMatrix pauli_z() { return {{-1.0, 0.0}, {0.0, 1.0}}; }

CMatrix hadamard() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {{-s, s}, {s, s}};
}

CMatrix phase_gate(double phi) { return {{std::polar(1.0, phi), 0.0}, {0.0, 1.0}}; }

CMatrix cnot_matrix() {
  return {{0.0, 1.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}, {0.0, 0.0, 1.0, 0.0}, {0.0, 0.0, 0.0, 1.0}};
}

CMatrix rotation_matrix(double theta, const std::array<double, 3> &n) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  CMatrix ns = n[0] * pauli_x() + n[1] * pauli_y() + n[2] * pauli_z();
  return c * CMatrix::identity(2) + complex_t{0.0, -s} * ns;
}

Gate make_t(int target) { return PhaseGate{target, std::numbers::pi / 4}; }

RotationGate make_rotation(int target, double theta, std::array<double, 3> axis,
                           std::string *warning) {
  const double norm = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(norm > 0.0) || !std::isfinite(norm)) throw InvalidArgument("rotation axis must be nonzero");
  if (std::abs(norm - 1.0) > 1e-6 && warning) {
    std::ostringstream os;
    os.precision(17);
    os << "rotation axis norm " << norm << " normalized to 1";
    *warning = os.str();
  }
  // Leave already-unit axes bit-identical so text round trips are exact.
  if (std::abs(norm - 1.0) > 1e-14) {
    for (auto &a : axis) a /= norm;
  }
  return RotationGate{target, theta, axis};
}

CustomGate make_custom(std::vector<int> targets, CMatrix matrix) {
  if (targets.empty()) throw InvalidArgument("custom gate needs at least one target");
  const std::size_t d = std::size_t{1} << targets.size();
  if (matrix.rows() != d || matrix.cols() != d) {
    throw InvalidArgument("custom gate on " + std::to_string(targets.size()) +
                          " qubit(s) needs a " + std::to_string(d) + "x" + std::to_string(d) +
                          " matrix, got " + matrix.shape_string());
  }
  for (std::size_t a = 0; a < targets.size(); ++a)
    for (std::size_t b = a + 1; b < targets.size(); ++b)
      if (targets[a] == targets[b]) throw InvalidArgument("custom gate repeats a target qubit");
  if (!is_unitary(matrix, 1e-10)) throw ValidationError("custom gate matrix is not unitary");
  return CustomGate{std::move(targets), std::move(matrix)};
}

CMatrix local_matrix(const Gate &g) {
  return std::visit(overloaded{
                        [](const HadamardGate &) { return hadamard(); },
                        [](const PhaseGate &p) { return phase_gate(p.phi); },
                        [](const CnotGate &) { return cnot_matrix(); },
                        [](const RotationGate &r) { return rotation_matrix(r.theta, r.axis); },
                        [](const CustomGate &u) { return u.matrix; },
                    },
                    g);
}

std::string gate_name(const Gate &g) {
  return std::visit(overloaded{
                        [](const HadamardGate &) { return std::string("H"); },
                        [](const PhaseGate &p) {
                          return std::string(p.phi == std::numbers::pi / 4 ? "T" : "P");
                        },
                        [](const CnotGate &) { return std::string("CNOT"); },
                        [](const RotationGate &) { return std::string("R"); },
                        [](const CustomGate &) { return std::string("U"); },
                    },
                    g);
}

CMatrix gate_matrix(const Gate &g, int num_qubits) {
  if (num_qubits < 1) throw InvalidArgument("gate_matrix: need at least one qubit");
  const auto targets = gate_targets(g);
  for (int t : targets) {
    if (t < 0 || t >= num_qubits) {
      throw InvalidArgument("gate " + gate_name(g) + " targets qubit " + std::to_string(t) +
                            " outside 0.." + std::to_string(num_qubits - 1));
    }
  }
  if (const auto *c = std::get_if<CnotGate>(&g); c && c->control == c->target) {
    throw InvalidArgument("CNOT control equals target");
  }
  const CMatrix local = local_matrix(g);
  const std::size_t d = std::size_t{1} << num_qubits;
  const std::size_t k = targets.size();

  std::size_t target_mask = 0;
  for (int t : targets) target_mask |= std::size_t{1} << (num_qubits - 1 - t);
  auto local_index = [&](std::size_t x) {
    std::size_t idx = 0;
    for (std::size_t a = 0; a < k; ++a) {
      idx = (idx << 1) | ((x >> (num_qubits - 1 - targets[a])) & 1U);
    }
    return idx;
  };

  CMatrix out(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if ((r & ~target_mask) != (c & ~target_mask)) continue;
      out(r, c) = local(local_index(r), local_index(c));
    }
  }
  return out;
}

CMatrix prefix_unitary(const Circuit &c, std::size_t j) {
  if (j > c.gates.size()) throw InvalidArgument("prefix_unitary: index out of range");
  CMatrix u = CMatrix::identity(std::size_t{1} << c.num_qubits);
  for (std::size_t k = 0; k < j; ++k) u = mat_mul(gate_matrix(c.gates[k], c.num_qubits), u);
  return u;
}

CMatrix suffix_unitary(const Circuit &c, std::size_t j) {
  if (j > c.gates.size()) throw InvalidArgument("suffix_unitary: index out of range");
  CMatrix u = CMatrix::identity(std::size_t{1} << c.num_qubits);
  for (std::size_t k = j; k < c.gates.size(); ++k) {
    u = mat_mul(gate_matrix(c.gates[k], c.num_qubits), u);
  }
  return u;
}

CMatrix circuit_unitary(const Circuit &c) { return prefix_unitary(c, c.gates.size()); }

Circuit circuit_from_operator_word(const std::string &word) {
  Circuit c;
  c.num_qubits = 1;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    switch (*it) {
    case 'H':
      c.gates.emplace_back(HadamardGate{0});
      break;
    case 'T':
      c.gates.push_back(make_t(0));
      break;
    default:
      throw InvalidArgument(std::string("unknown gate letter '") + *it + "' in word " + word);
    }
  }
  return c;
}

} // namespace kdwork
