#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>

#include "mti/types.hpp"

namespace mti {

/// Dense complex matrix, row-major storage.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const Complex* row_ptr(std::size_t i) const { return data_.data() + i * cols_; }
  Complex* row_ptr(std::size_t i) { return data_.data() + i * cols_; }

  CVector col(std::size_t j) const {
    CVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_col(std::size_t j, const CVector& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  ComplexMatrix adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
    return out;
  }

  bool all_finite() const {
    for (const Complex& c : data_)
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
  }

  double max_abs() const {
    double m = 0.0;
    for (const Complex& c : data_) m = std::max(m, std::abs(c));
    return m;
  }

  const CVector& data() const { return data_; }
  CVector& data() { return data_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  CVector data_;
};

inline CVector mat_vec(const ComplexMatrix& a, const CVector& x) {
  if (a.cols() != x.size()) throw LengthMismatch("mat_vec: dimension mismatch");
  CVector y(a.rows(), Complex{0.0, 0.0});
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const Complex* row = a.row_ptr(i);
    Complex acc{0.0, 0.0};
    for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
  return y;
}

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw LengthMismatch("multiply: dimension mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{0.0, 0.0}) continue;
      const Complex* brow = b.row_ptr(k);
      Complex* crow = c.row_ptr(i);
      for (std::size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (const Complex& c : a.data()) acc += std::norm(c);
  return std::sqrt(acc);
}

/// Hermitian matrix wrapper. Construction validates approximate Hermitian
/// symmetry (1e-12 relative) and then symmetrizes exactly so downstream
/// algebra can rely on entry(i,j) == conj(entry(j,i)).
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  explicit HermitianMatrix(ComplexMatrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols()) throw LengthMismatch("HermitianMatrix: not square");
    const double scale = m_.max_abs();
    const double tol = 1e-12 * std::max(scale, 1e-300);
    for (std::size_t i = 0; i < m_.rows(); ++i) {
      for (std::size_t j = i; j < m_.cols(); ++j) {
        const Complex d = m_(i, j) - std::conj(m_(j, i));
        if (std::abs(d) > tol)
          throw NumericError("HermitianMatrix: input not Hermitian within tolerance");
        const Complex sym = 0.5 * (m_(i, j) + std::conj(m_(j, i)));
        m_(i, j) = sym;
        m_(j, i) = std::conj(sym);
      }
      m_(i, i) = Complex{m_(i, i).real(), 0.0};
    }
  }

  /// For matrices that are Hermitian exactly by construction.
  static HermitianMatrix unchecked(ComplexMatrix m) {
    HermitianMatrix h;
    h.m_ = std::move(m);
    return h;
  }

  static HermitianMatrix identity_scaled(std::size_t n, double v) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = v;
    return unchecked(std::move(m));
  }

  std::size_t dim() const { return m_.rows(); }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  const ComplexMatrix& matrix() const { return m_; }

  HermitianMatrix plus_scaled_identity(double alpha) const {
    ComplexMatrix out = m_;
    for (std::size_t i = 0; i < dim(); ++i) out(i, i) += alpha;
    return unchecked(std::move(out));
  }

  double max_diag() const {
    double m = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) m = std::max(m, std::abs(m_(i, i).real()));
    return m;
  }

  double trace_real() const {
    double t = 0.0;
    for (std::size_t i = 0; i < dim(); ++i) t += m_(i, i).real();
    return t;
  }

 private:
  ComplexMatrix m_;
};

inline CVector mat_vec(const HermitianMatrix& a, const CVector& x) {
  return mat_vec(a.matrix(), x);
}

/// Real value of w^H A w (exact for Hermitian A).
inline double quad_form(const HermitianMatrix& a, const CVector& w) {
  if (a.dim() != w.size()) throw LengthMismatch("quad_form: dimension mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Complex* row = a.matrix().row_ptr(i);
    Complex rowacc{0.0, 0.0};
    for (std::size_t j = 0; j < a.dim(); ++j) rowacc += row[j] * w[j];
    acc += std::conj(w[i]) * rowacc;
  }
  return acc.real();
}

/// Hermitian Toeplitz matrix given by its first column; r[-k] = conj(r[k]).
struct ToeplitzSpec {
  std::size_t dim = 0;
  CVector first_column;

  void validate() const {
    if (dim == 0 || first_column.size() != dim)
      throw LengthMismatch("ToeplitzSpec: first_column size must equal dim");
    if (!mti::all_finite(first_column)) throw NumericError("ToeplitzSpec: non-finite entries");
  }

  /// Entry (i, j) of the implied matrix.
  Complex entry(std::size_t i, std::size_t j) const {
    return i >= j ? first_column[i - j] : std::conj(first_column[j - i]);
  }

  HermitianMatrix to_dense() const {
    validate();
    ComplexMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = entry(i, j);
    return HermitianMatrix::unchecked(std::move(m));
  }
};

}  // namespace mti
