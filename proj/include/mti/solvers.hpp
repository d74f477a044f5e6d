#pragma once

#include "mti/covariance.hpp"
#include "mti/linalg.hpp"
#include "mti/matrix.hpp"
#include "mti/signal_model.hpp"
#include "mti/types.hpp"

namespace mti {

/// Wiener-Hopf weights w = R^{-1} s for a known interference-plus-noise
/// covariance.
inline WeightVector optimal_weights(const HermitianMatrix& r, const CVector& s) {
  return WeightVector{solve_hermitian(r, s), AlgorithmTag::Optimal};
}

/// Loaded sample-matrix-inversion weights w = (R_hat + alpha I)^{-1} s from a
/// precomputed estimate.
inline WeightVector rsmi_weights(const CovarianceEstimate& est, const CVector& s,
                                 double alpha) {
  if (!(alpha > 0.0)) throw NegativeLoading("rsmi_weights: alpha must be positive");
  return WeightVector{solve_hermitian(est.matrix.plus_scaled_identity(est.loading + alpha), s),
                      AlgorithmTag::Rsmi};
}

inline WeightVector rsmi_weights(const TrainingSet& x, const CVector& s, double alpha) {
  return rsmi_weights(sample_covariance(x), s, alpha);
}

/// Plain SMI weights w = R_hat^{-1} s; requires the sample covariance to be
/// positive definite (generically M >= N).
inline WeightVector smi_weights(const CovarianceEstimate& est, const CVector& s) {
  return WeightVector{solve_hermitian(est.matrix.plus_scaled_identity(est.loading), s),
                      AlgorithmTag::Smi};
}

inline WeightVector smi_weights(const TrainingSet& x, const CVector& s) {
  return smi_weights(sample_covariance(x), s);
}

/// Whitening transform T (lower triangular) with T R T^H = I: the inverse of
/// the Cholesky factor of R. Applying T to snapshots drawn with covariance R
/// decorrelates and power-normalizes them, which is the sequential
/// Gram-Schmidt processor in matrix form.
inline ComplexMatrix gram_schmidt_whitener(const HermitianMatrix& r) {
  return lower_triangular_inverse(cholesky_lower(r));
}

/// Detection statistic w^H x.
inline Complex test_statistic(const WeightVector& w, const CVector& x) {
  if (w.values.size() != x.size()) throw LengthMismatch("test_statistic: length mismatch");
  return dot(w.values, x);
}

inline Complex test_statistic(const WeightVector& w, const Snapshot& x) {
  return test_statistic(w, x.values);
}

}  // namespace mti
