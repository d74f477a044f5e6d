#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "mti/matrix.hpp"
#include "mti/types.hpp"

namespace mti {

inline double default_pivot_tol(const HermitianMatrix& a) {
  return static_cast<double>(a.dim()) * 1e-14 * a.max_diag();
}

/// Cholesky factorization A = L L^H for Hermitian positive definite A.
/// A pivot <= pivot_tol rejects the matrix as not positive definite; the
/// default tolerance dim * 1e-14 * max|diag| is scale invariant. Callers that
/// factor deliberately near-singular matrices (rank-deficient covariance plus
/// tiny jitter) may pass pivot_tol = 0 to accept any positive pivot.
inline ComplexMatrix cholesky_lower(const HermitianMatrix& a, double pivot_tol = -1.0) {
  const std::size_t n = a.dim();
  if (!a.matrix().all_finite()) throw NumericError("cholesky_lower: non-finite entries");
  const double tol = pivot_tol >= 0.0 ? pivot_tol : default_pivot_tol(a);

  ComplexMatrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = a(j, j).real();
    const Complex* lrow_j = l.row_ptr(j);
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(lrow_j[k]);
    if (!(d > tol)) throw NotPositiveDefinite("cholesky_lower: non-positive pivot");
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = a(i, j);
      const Complex* lrow_i = l.row_ptr(i);
      for (std::size_t k = 0; k < j; ++k) s -= lrow_i[k] * std::conj(lrow_j[k]);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

/// Holds L from A = L L^H and solves A x = b by two triangular sweeps.
class CholeskyFactor {
 public:
  explicit CholeskyFactor(const HermitianMatrix& a, double pivot_tol = -1.0)
      : l_(cholesky_lower(a, pivot_tol)) {}

  const ComplexMatrix& lower() const { return l_; }

  CVector solve(const CVector& b) const {
    const std::size_t n = l_.rows();
    if (b.size() != n) throw LengthMismatch("CholeskyFactor::solve: size mismatch");
    CVector y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex s = b[i];
      const Complex* row = l_.row_ptr(i);
      for (std::size_t k = 0; k < i; ++k) s -= row[k] * y[k];
      y[i] = s / row[i].real();
    }
    CVector x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      Complex s = y[ii];
      for (std::size_t k = ii + 1; k < n; ++k) s -= std::conj(l_(k, ii)) * x[k];
      x[ii] = s / l_(ii, ii).real();
    }
    return x;
  }

 private:
  ComplexMatrix l_;
};

/// Solves A x = b for Hermitian positive definite A; ||Ax - b|| / ||b|| <= 1e-10.
inline CVector solve_hermitian(const HermitianMatrix& a, const CVector& b) {
  if (!mti::all_finite(b)) throw NumericError("solve_hermitian: non-finite rhs");
  return CholeskyFactor(a).solve(b);
}

/// Inverse of a lower-triangular matrix (forward substitution per column).
inline ComplexMatrix lower_triangular_inverse(const ComplexMatrix& l) {
  const std::size_t n = l.rows();
  ComplexMatrix t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    if (l(j, j) == Complex{0.0, 0.0})
      throw SingularSystem("lower_triangular_inverse: zero diagonal");
    t(j, j) = 1.0 / l(j, j);
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s{0.0, 0.0};
      const Complex* lrow = l.row_ptr(i);
      for (std::size_t k = j; k < i; ++k) s -= lrow[k] * t(k, j);
      t(i, j) = s / l(i, i);
    }
  }
  return t;
}

/// Output of the Levinson-Durbin recursion on a Hermitian PD Toeplitz matrix:
/// monic forward prediction filter [1, a1..am], its error power, and the
/// per-order reflection coefficients and error powers.
struct LevinsonResult {
  CVector monic;                      // monic[0] == 1
  double error_power = 0.0;           // rho_m
  CVector reflections;                // k_1 .. k_m
  std::vector<double> error_history;  // rho_0 .. rho_m
};

inline LevinsonResult levinson(const ToeplitzSpec& t, std::size_t order) {
  t.validate();
  if (order >= t.dim) throw OrderTooHigh("levinson: order must be < dim");
  const CVector& r = t.first_column;
  if (std::abs(r[0].imag()) > 1e-12 * std::abs(r[0]) || r[0].real() <= 0.0)
    throw NotPositiveDefinite("levinson: r[0] must be real positive");

  LevinsonResult res;
  res.monic.assign(1, Complex{1.0, 0.0});
  res.error_power = r[0].real();
  res.error_history.push_back(res.error_power);

  for (std::size_t m = 1; m <= order; ++m) {
    Complex acc = r[m];
    for (std::size_t k = 1; k < m; ++k) acc += res.monic[k] * r[m - k];
    const Complex km = -acc / res.error_power;
    CVector next(m + 1);
    next[0] = 1.0;
    for (std::size_t k = 1; k < m; ++k)
      next[k] = res.monic[k] + km * std::conj(res.monic[m - k]);
    next[m] = km;
    res.monic = std::move(next);
    res.error_power *= 1.0 - std::norm(km);
    if (!(res.error_power > 0.0))
      throw NotPositiveDefinite("levinson: prediction error power not positive");
    res.reflections.push_back(km);
    res.error_history.push_back(res.error_power);
  }
  return res;
}

/// Full inverse of a Hermitian PD Toeplitz matrix in O(N^2): Levinson-Durbin
/// recursion for the edge columns, persymmetric rank-two completion for the
/// interior. Agrees with dense inversion to 1e-9 relative Frobenius error.
inline ComplexMatrix toeplitz_inverse(const ToeplitzSpec& t) {
  const std::size_t n = t.dim;
  if (n == 1) {
    if (t.first_column[0].real() <= 0.0)
      throw NotPositiveDefinite("toeplitz_inverse: scalar not positive");
    ComplexMatrix m(1, 1);
    m(0, 0) = 1.0 / t.first_column[0].real();
    return m;
  }
  const LevinsonResult lev = levinson(t, n - 1);
  const CVector& a = lev.monic;  // size n, a[0] = 1
  const double inv_e = 1.0 / lev.error_power;

  ComplexMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) b(i, 0) = a[i] * inv_e;
  for (std::size_t j = 1; j < n; ++j) b(0, j) = std::conj(b(j, 0));
  // Gohberg-Semencul style diagonal recurrence; fill j >= i, mirror the rest.
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = i; j + 1 < n; ++j) {
      const Complex step =
          (a[i + 1] * std::conj(a[j + 1]) - std::conj(a[n - 1 - i]) * a[n - 1 - j]) * inv_e;
      const Complex v = b(i, j) + step;
      b(i + 1, j + 1) = v;
      b(j + 1, i + 1) = std::conj(v);
    }
  }
  return b;
}

/// Hung-Turner adaptive weights: w = s - X (X^H X + M alpha I)^{-1} X^H s.
/// Positive-real proportional to loaded-SMI weights (X X^H / M + alpha I)^{-1} s.
inline WeightVector hung_turner_weights(const ComplexMatrix& x, const CVector& s, double alpha) {
  const std::size_t n = x.rows();
  const std::size_t m = x.cols();
  if (s.size() != n) throw LengthMismatch("hung_turner_weights: steering length mismatch");
  if (!(alpha > 0.0)) throw NumericError("hung_turner_weights: alpha must be positive");
  if (m == 0) return WeightVector{s, AlgorithmTag::Rsmi};

  // G = X^H X + M alpha I  (m x m)
  ComplexMatrix g(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(x(k, i)) * x(k, j);
      g(i, j) = acc;
      g(j, i) = std::conj(acc);
    }
    g(i, i) += static_cast<double>(m) * alpha;
  }
  CVector xhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    Complex acc{0.0, 0.0};
    for (std::size_t k = 0; k < n; ++k) acc += std::conj(x(k, i)) * s[k];
    xhs[i] = acc;
  }
  CVector y;
  try {
    y = CholeskyFactor(HermitianMatrix::unchecked(std::move(g))).solve(xhs);
  } catch (const NotPositiveDefinite&) {
    throw SingularSystem("hung_turner_weights: inner system not positive definite");
  }
  CVector w = s;
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < m; ++i) acc += x(k, i) * y[i];
    w[k] -= acc;
  }
  return WeightVector{std::move(w), AlgorithmTag::Rsmi};
}

}  // namespace mti
