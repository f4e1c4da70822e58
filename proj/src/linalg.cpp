#include "kdwork/linalg.hpp"

#include "kdwork/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kdwork {

namespace {

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw InvalidArgument(std::string(op) + ": shape mismatch " + a.shape_string() +
                          " vs " + b.shape_string());
  }
}

void require_square(const CMatrix &a, const char *op) {
  if (!a.is_square()) {
    throw InvalidArgument(std::string(op) + ": matrix " + a.shape_string() +
                          " is not square");
  }
}

bool finite(complex_t z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, complex_t{0.0, 0.0}) {}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<complex_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw InvalidArgument("CMatrix: " + std::to_string(data_.size()) +
                          " entries do not fill a " + shape_string() + " matrix");
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw InvalidArgument("CMatrix: non-finite entry");
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<complex_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto &row : rows) {
    if (row.size() != cols_) throw InvalidArgument("CMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
  if (!std::all_of(data_.begin(), data_.end(), finite)) {
    throw InvalidArgument("CMatrix: non-finite entry");
  }
}

CMatrix CMatrix::identity(std::size_t d) {
  CMatrix m(d, d);
  for (std::size_t k = 0; k < d; ++k) m(k, k) = 1.0;
  return m;
}

CMatrix CMatrix::zeros(std::size_t rows, std::size_t cols) { return CMatrix(rows, cols); }

CMatrix CMatrix::diagonal(std::span<const complex_t> diag) {
  CMatrix m(diag.size(), diag.size());
  for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
  return m;
}

CMatrix CMatrix::basis_projector(std::size_t d, std::size_t k) {
  if (k >= d) throw InvalidArgument("basis_projector: index out of range");
  CMatrix m(d, d);
  m(k, k) = 1.0;
  return m;
}

std::string CMatrix::shape_string() const {
  std::ostringstream os;
  os << rows_ << "x" << cols_;
  return os.str();
}

CMatrix &CMatrix::operator+=(const CMatrix &o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatrix &CMatrix::operator*=(complex_t s) {
  for (auto &z : data_) z *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(complex_t s, CMatrix a) { return a *= s; }
CMatrix operator*(const CMatrix &a, const CMatrix &b) { return mat_mul(a, b); }

CMatrix mat_mul(const CMatrix &a, const CMatrix &b) {
  if (a.cols() != b.rows()) {
    throw InvalidArgument("mat_mul: cannot multiply " + a.shape_string() + " by " +
                          b.shape_string());
  }
  CMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const complex_t aik = a(i, k);
      if (aik == complex_t{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

CMatrix kron(const CMatrix &a, const CMatrix &b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac)
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
  return out;
}

CMatrix adjoint(const CMatrix &a) {
  CMatrix out(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(c, r) = std::conj(a(r, c));
  return out;
}

complex_t trace(const CMatrix &a) {
  require_square(a, "trace");
  complex_t t{};
  for (std::size_t k = 0; k < a.rows(); ++k) t += a(k, k);
  return t;
}

CMatrix commutator(const CMatrix &a, const CMatrix &b) {
  require_square(a, "commutator");
  require_same_shape(a, b, "commutator");
  return mat_mul(a, b) - mat_mul(b, a);
}

CMatrix anticommutator(const CMatrix &a, const CMatrix &b) {
  require_square(a, "anticommutator");
  require_same_shape(a, b, "anticommutator");
  return mat_mul(a, b) + mat_mul(b, a);
}

double frobenius_norm(const CMatrix &a) {
  double s = 0.0;
  for (const auto &z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const CMatrix &a, const CMatrix &b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k) m = std::max(m, std::abs(ea[k] - eb[k]));
  return m;
}

double max_abs(const CMatrix &a) {
  double m = 0.0;
  for (const auto &z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

bool is_unitary(const CMatrix &a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(mat_mul(adjoint(a), a), CMatrix::identity(a.rows())) <= tol;
}

bool is_hermitian(const CMatrix &a, double tol) {
  if (!a.is_square()) return false;
  return max_abs_diff(a, adjoint(a)) <= tol;
}

bool is_psd(const CMatrix &a, double tol) {
  if (!is_hermitian(a, 1e-9)) return false;
  if (a.rows() == 1) return a(0, 0).real() >= -tol;
  if (a.rows() == 2) {
    // Closed form for 2x2: lambda_min = tr/2 - sqrt((a-d)^2/4 + |b|^2).
    const double p = a(0, 0).real();
    const double q = a(1, 1).real();
    const double lmin = 0.5 * (p + q) - std::sqrt(0.25 * (p - q) * (p - q) + std::norm(a(0, 1)));
    return lmin >= -tol;
  }
  const auto ev = hermitian_eigenvalues(a);
  return ev.front() >= -tol;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &a) {
  if (!a.is_square()) throw InvalidArgument("hermitian_eigenvalues: matrix not square");
  const std::size_t d = a.rows();
  const std::size_t n = 2 * d;
  std::vector<double> m(n * n);
  auto at = [&](std::size_t r, std::size_t c) -> double & { return m[r * n + c]; };
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      // Hermitian part only; guards against tiny asymmetric round-off.
      const complex_t h = 0.5 * (a(r, c) + std::conj(a(c, r)));
      at(r, c) = h.real();
      at(r + d, c + d) = h.real();
      at(r, c + d) = -h.imag();
      at(r + d, c) = h.imag();
    }
  }

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> doubled(n);
  for (std::size_t k = 0; k < n; ++k) doubled[k] = at(k, k);
  std::sort(doubled.begin(), doubled.end());
  std::vector<double> ev(d);
  for (std::size_t k = 0; k < d; ++k) ev[k] = 0.5 * (doubled[2 * k] + doubled[2 * k + 1]);
  return ev;
}

} // namespace kdwork
