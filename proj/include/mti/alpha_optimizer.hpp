#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "mti/covariance.hpp"
#include "mti/linalg.hpp"
#include "mti/solvers.hpp"
#include "mti/types.hpp"

namespace mti {

/// One step of the loading-level iteration, recorded for diagnostics.
struct AlphaIteration {
  double alpha = 0.0;  // loading used for this iteration's solves
  CVector w_tilde;
  CVector v_tilde;
  double lambda = 0.0;
};

/// Lagrange multiplier of the linearized constrained problem,
/// lambda = -1 - [2 Re(w~^H v~ (1 - w~^H s)) + Re((w~^H w~)(v~^H s))] / |s^H v~|^2.
/// All quantities are analytically real; real parts are taken exactly where
/// the empirical versions pick up rounding-level imaginary parts.
inline double lambda_of(const CVector& w_tilde, const CVector& v_tilde, const CVector& s) {
  const Complex shv = dot(s, v_tilde);
  const double denom = std::norm(shv);
  if (denom < 1e-300) throw DegenerateDirection("lambda_of: s^H v is degenerate");
  const Complex whv = dot(w_tilde, v_tilde);
  const Complex whs = dot(w_tilde, s);
  const double whw = norm2(w_tilde);
  const Complex vhs = dot(v_tilde, s);
  const double num = (2.0 * (whv * (1.0 - whs))).real() + (whw * vhs).real();
  return -1.0 - num / denom;
}

/// Stationary loading of the linearized problem, clamped to [0, inf):
/// alpha = Re(w~^H w~ + v~^H s + lambda v~^H s) / Re(2 v~^H w~).
inline double alpha_update(const CVector& w_tilde, const CVector& v_tilde, const CVector& s,
                           double lambda) {
  const double denom = 2.0 * dot(v_tilde, w_tilde).real();
  if (std::abs(denom) < 1e-300) throw DegenerateDirection("alpha_update: v^H w is degenerate");
  const double vhs = dot(v_tilde, s).real();
  const double alpha = (norm2(w_tilde) + vhs + lambda * vhs) / denom;
  return std::max(0.0, alpha);
}

/// Unclamped variant, used to compare against grid-search oracles.
inline double alpha_update_raw(const CVector& w_tilde, const CVector& v_tilde,
                               const CVector& s, double lambda) {
  const double denom = 2.0 * dot(v_tilde, w_tilde).real();
  if (std::abs(denom) < 1e-300) throw DegenerateDirection("alpha_update: v^H w is degenerate");
  const double vhs = dot(v_tilde, s).real();
  return (norm2(w_tilde) + vhs + lambda * vhs) / denom;
}

struct LoadingResult {
  double alpha = 0.0;  // final loading used for the weights
  WeightVector weights;
  std::vector<AlphaIteration> trace;
};

/// Iterative empirical Rayleigh-quotient optimization of the loading level.
/// Starts at alpha_0 = sigma^2 (noise power) unless overridden, runs a fixed
/// number of iterations (each one solve pair against R_hat + alpha_i I, then a
/// lambda/alpha update), and returns the weights at the final loading.
inline LoadingResult optimize_loading(const CovarianceEstimate& r_hat, const CVector& s,
                                      double sigma2_noise, int iterations,
                                      std::optional<double> alpha0 = std::nullopt) {
  if (iterations < 1) throw ConfigError("optimize_loading: iterations must be >= 1");
  LoadingResult res;
  double alpha = alpha0.value_or(sigma2_noise);
  for (int i = 0; i < iterations; ++i) {
    const CholeskyFactor f(r_hat.matrix.plus_scaled_identity(r_hat.loading + alpha));
    AlphaIteration it;
    it.alpha = alpha;
    it.w_tilde = f.solve(s);
    it.v_tilde = f.solve(it.w_tilde);
    it.lambda = lambda_of(it.w_tilde, it.v_tilde, s);
    alpha = alpha_update(it.w_tilde, it.v_tilde, s, it.lambda);
    res.trace.push_back(std::move(it));
  }
  res.alpha = alpha;
  res.weights = WeightVector{
      solve_hermitian(r_hat.matrix.plus_scaled_identity(r_hat.loading + alpha), s),
      AlgorithmTag::Rsmi};
  return res;
}

}  // namespace mti
