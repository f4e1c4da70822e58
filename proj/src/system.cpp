#include "kdwork/system.hpp"

#include "kdwork/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kdwork {

CMatrix Hamiltonian::matrix() const {
  const std::size_t d = dim();
  CMatrix h(d, d);
  for (std::size_t k = 0; k < d; ++k) h(k, k) = eigenvalues[k];
  return h;
}

Hamiltonian build_hamiltonian(int num_qubits, double energy_scale) {
  if (num_qubits < 1) throw InvalidArgument("build_hamiltonian: need at least one qubit");
  if (num_qubits > 12) throw InvalidArgument("build_hamiltonian: too many qubits");
  if (!(energy_scale > 0.0) || !std::isfinite(energy_scale)) {
    throw InvalidArgument("build_hamiltonian: energy scale must be positive");
  }
  Hamiltonian h;
  h.num_qubits = num_qubits;
  h.energy_scale = energy_scale;
  const std::size_t d = std::size_t{1} << num_qubits;
  for (std::size_t k = 0; k < d; ++k) {
    int ups = 0;
    std::string label;
    for (int q = 0; q < num_qubits; ++q) {
      const bool up = (k >> (num_qubits - 1 - q)) & 1U;
      ups += up;
      label.push_back(up ? 'u' : 'd');
    }
    h.eigenvalues.push_back(energy_scale * (2 * ups - num_qubits));
    h.projectors.push_back(CMatrix::basis_projector(d, k));
    h.basis_labels.push_back(label);
  }
  return h;
}

DensityMatrix::DensityMatrix(CMatrix m) : m_(std::move(m)) {
  if (!m_.is_square() || m_.rows() == 0) {
    throw ValidationError("density matrix must be square, got " + m_.shape_string());
  }
  if (!is_hermitian(m_, kStateTol)) throw ValidationError("density matrix is not Hermitian");
  const complex_t tr = trace(m_);
  if (std::abs(tr - 1.0) > kStateTol) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace is " << tr.real() << ", expected 1";
    throw ValidationError(os.str());
  }
  if (!is_psd(m_, kPsdTol)) throw ValidationError("density matrix is not positive semidefinite");
}

DensityMatrix qubit_state(const QubitStateParams &params) {
  const double p = params.p;
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("qubit_state: p must lie in [0, 1]");
  if (!(params.gamma_abs >= 0.0)) throw ValidationError("qubit_state: |gamma| must be >= 0");
  if (params.gamma_abs > std::sqrt(p * (1.0 - p)) + 1e-12) {
    std::ostringstream os;
    os.precision(17);
    os << "qubit_state: |gamma| = " << params.gamma_abs << " exceeds sqrt(p(1-p)) = "
       << std::sqrt(p * (1.0 - p));
    throw ValidationError(os.str());
  }
  const complex_t gamma = std::polar(params.gamma_abs, params.gamma_phase);
  CMatrix m(2, 2);
  m(0, 0) = 1.0 - p;
  m(1, 1) = p;
  m(1, 0) = gamma;
  m(0, 1) = std::conj(gamma);
  return DensityMatrix(std::move(m));
}

DensityMatrix pure_state(const std::vector<complex_t> &ket) {
  double norm2 = 0.0;
  for (const auto &z : ket) norm2 += std::norm(z);
  if (!(norm2 > 0.0)) throw ValidationError("pure_state: zero vector");
  const double inv = 1.0 / std::sqrt(norm2);
  const std::size_t d = ket.size();
  CMatrix m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) m(r, c) = ket[r] * std::conj(ket[c]) * inv * inv;
  // Exact Hermiticity and real diagonal regardless of rounding in the products.
  for (std::size_t r = 0; r < d; ++r) {
    m(r, r) = m(r, r).real();
    for (std::size_t c = r + 1; c < d; ++c) m(c, r) = std::conj(m(r, c));
  }
  return DensityMatrix(std::move(m));
}

DensityMatrix pure_state_bloch(double theta, double phi) {
  return pure_state({std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)});
}

DensityMatrix pure_state_pop_phase(double p, double phi) {
  if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("pure_state_pop_phase: p must lie in [0, 1]");
  return pure_state({std::polar(std::sqrt(1.0 - p), phi), std::sqrt(p)});
}

DensityMatrix product_state(const DensityMatrix &a, const DensityMatrix &b) {
  return DensityMatrix(kron(a.matrix(), b.matrix()));
}

StateSplit dephase_split(const DensityMatrix &rho) {
  const std::size_t d = rho.dim();
  CMatrix diag(d, d);
  CMatrix coh = rho.matrix();
  for (std::size_t k = 0; k < d; ++k) {
    diag(k, k) = rho(k, k);
    coh(k, k) = 0.0;
  }
  return StateSplit{DensityMatrix(std::move(diag)), std::move(coh)};
}

DensityMatrix thermal_state(const Hamiltonian &h, double beta) {
  if (!std::isfinite(beta)) throw InvalidArgument("thermal_state: beta must be finite");
  const std::size_t d = h.dim();
  std::vector<double> w(d);
  double xmax = -beta * h.eigenvalues.front();
  for (double e : h.eigenvalues) xmax = std::max(xmax, -beta * e);
  // Shift the exponent so the largest weight is exactly 1.
  double z = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    w[k] = std::exp(-beta * h.eigenvalues[k] - xmax);
    z += w[k];
  }
  CMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) m(k, k) = w[k] / z;
  return DensityMatrix(std::move(m));
}

double effective_beta(const DensityMatrix &rho, const Hamiltonian &h) {
  if (h.num_qubits != 1 || rho.dim() != 2) {
    throw InvalidArgument("effective_beta: defined for a single qubit only");
  }
  if (std::abs(rho(0, 1)) > kStateTol) {
    throw InvalidArgument("effective_beta: state has coherences in the energy basis");
  }
  const double p = rho(1, 1).real();
  if (p <= 0.0 || p >= 1.0) {
    throw InvalidArgument("effective_beta: pure energy eigenstate has infinite inverse temperature");
  }
  return -std::log(p / (1.0 - p)) / (h.eigenvalues[1] - h.eigenvalues[0]);
}

DensityMatrix reduced_state(const DensityMatrix &rho, int num_qubits, int qubit) {
  const std::size_t d = std::size_t{1} << num_qubits;
  if (rho.dim() != d) throw InvalidArgument("reduced_state: dimension does not match qubit count");
  if (qubit < 0 || qubit >= num_qubits) throw InvalidArgument("reduced_state: qubit out of range");
  const int shift = num_qubits - 1 - qubit;
  CMatrix out(2, 2);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      // Trace over all other qubits: their bits must agree.
      if ((r & ~(std::size_t{1} << shift)) != (c & ~(std::size_t{1} << shift))) continue;
      out((r >> shift) & 1U, (c >> shift) & 1U) += rho(r, c);
    }
  }
  return DensityMatrix(std::move(out));
}

CMatrix to_up_first(const CMatrix &m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out(m.rows() - 1 - r, m.cols() - 1 - c) = m(r, c);
  return out;
}

} // namespace kdwork
