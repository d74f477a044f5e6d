#pragma once

#include "mti/matrix.hpp"
#include "mti/signal_model.hpp"
#include "mti/types.hpp"

namespace mti {

/// Sample covariance with a symbolically recorded diagonal loading level; the
/// loading is kept separate so one estimate can be re-solved under many
/// loading values.
struct CovarianceEstimate {
  HermitianMatrix matrix;
  std::size_t sample_count = 0;
  double loading = 0.0;

  HermitianMatrix effective() const { return matrix.plus_scaled_identity(loading); }
};

/// Maximum-likelihood estimate (1/M) X X^H; Hermitian PSD by construction.
inline CovarianceEstimate sample_covariance(const TrainingSet& x) {
  const std::size_t n = x.n();
  const std::size_t m = x.m();
  if (m == 0) throw ConfigError("sample_covariance: empty training set");
  ComplexMatrix r(n, n);
  const double inv_m = 1.0 / static_cast<double>(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Complex acc{0.0, 0.0};
      for (std::size_t k = 0; k < m; ++k)
        acc += x.snapshots(i, k) * std::conj(x.snapshots(j, k));
      acc *= inv_m;
      r(i, j) = acc;
      r(j, i) = std::conj(acc);
    }
    r(i, i) = Complex{r(i, i).real(), 0.0};
  }
  return CovarianceEstimate{HermitianMatrix::unchecked(std::move(r)), m, 0.0};
}

inline CovarianceEstimate with_loading(const CovarianceEstimate& est, double alpha) {
  if (alpha < 0.0) throw NegativeLoading("with_loading: alpha must be >= 0");
  CovarianceEstimate out = est;
  out.loading = alpha;
  return out;
}

}  // namespace mti
