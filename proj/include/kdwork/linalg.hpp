#pragma once

// Dense complex matrices for few-qubit operators (d = 2^L, L small).

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kdwork {

using complex_t = std::complex<double>;

/// Default absolute tolerance for entrywise comparisons.
inline constexpr double kDefaultTol = 1e-12;

/// Row-major dense complex matrix. Every entry is finite.
class CMatrix {
public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<complex_t> entries);
  CMatrix(std::initializer_list<std::initializer_list<complex_t>> rows);

  static CMatrix identity(std::size_t d);
  static CMatrix zeros(std::size_t rows, std::size_t cols);
  static CMatrix diagonal(std::span<const complex_t> diag);
  /// |k><k| in dimension d.
  static CMatrix basis_projector(std::size_t d, std::size_t k);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  std::string shape_string() const;

  complex_t &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const complex_t &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const complex_t> entries() const noexcept { return data_; }

  CMatrix &operator+=(const CMatrix &o);
  CMatrix &operator-=(const CMatrix &o);
  CMatrix &operator*=(complex_t s);

  friend bool operator==(const CMatrix &, const CMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<complex_t> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(complex_t s, CMatrix a);
CMatrix operator*(const CMatrix &a, const CMatrix &b);

CMatrix mat_mul(const CMatrix &a, const CMatrix &b);
/// Kronecker product; `a` is the slow (left, lower-numbered qubit) factor.
CMatrix kron(const CMatrix &a, const CMatrix &b);
CMatrix adjoint(const CMatrix &a);
complex_t trace(const CMatrix &a);
CMatrix commutator(const CMatrix &a, const CMatrix &b);
CMatrix anticommutator(const CMatrix &a, const CMatrix &b);

double frobenius_norm(const CMatrix &a);
/// max |a_ij - b_ij|; shapes must agree.
double max_abs_diff(const CMatrix &a, const CMatrix &b);
double max_abs(const CMatrix &a);

bool is_unitary(const CMatrix &a, double tol);
bool is_hermitian(const CMatrix &a, double tol);
/// Smallest eigenvalue >= -tol. Requires a Hermitian input (returns false otherwise).
bool is_psd(const CMatrix &a, double tol);

/// Eigenvalues of a Hermitian matrix, ascending. Cyclic Jacobi on the real
/// 2d x 2d embedding [[Re, -Im], [Im, Re]]; each eigenvalue appears twice there
/// and is reported once.
std::vector<double> hermitian_eigenvalues(const CMatrix &a);

} // namespace kdwork
