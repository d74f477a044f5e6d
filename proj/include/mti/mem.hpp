#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "mti/linalg.hpp"
#include "mti/matrix.hpp"
#include "mti/types.hpp"

namespace mti {

/// Autoregressive clutter model in predictor form: the one-step prediction is
/// x_hat(n) = sum_{i=1..order} coefficients[i-1] * x(n-i), and error_power is
/// the innovation power of the prediction residual.
struct ArModel {
  std::size_t order = 0;
  CVector coefficients;       // C_M(1..M)
  double error_power = 0.0;   // strictly positive, non-increasing in order
  CVector reflection_history; // C_m(m) for m = 1..M, all |.| <= 1
};

/// Solves the augmented Yule-Walker system for a known covariance sequence.
/// The solution [1, -C_1, ..., -C_M] / error_power is the first column of the
/// inverse covariance matrix truncated to order+1.
inline ArModel yule_walker(const ToeplitzSpec& t, std::size_t order) {
  if (order >= t.dim) throw OrderTooHigh("yule_walker: order must be < dim");
  const LevinsonResult lev = levinson(t, order);
  ArModel model;
  model.order = order;
  model.coefficients.resize(order);
  for (std::size_t i = 0; i < order; ++i) model.coefficients[i] = -lev.monic[i + 1];
  model.error_power = lev.error_power;
  model.reflection_history.resize(order);
  for (std::size_t i = 0; i < order; ++i) model.reflection_history[i] = -lev.reflections[i];
  return model;
}

/// Burg lattice estimate from raw data: reflection coefficients minimize the
/// summed forward/backward prediction error power at each order, which keeps
/// |C_m(m)| <= 1 by Cauchy-Schwarz, and the error power update is
/// e2(m) = (1 - |C_m(m)|^2) e2(m-1).
inline ArModel burg_estimate(const CVector& x, std::size_t order) {
  const std::size_t n = x.size();
  if (order >= n) throw OrderTooHigh("burg_estimate: order must be < length(x)");
  ArModel model;
  model.order = order;
  model.error_power = norm2(x) / static_cast<double>(n);

  CVector monic{Complex{1.0, 0.0}};
  CVector f = x;  // forward error, valid on [m, n)
  CVector b = x;  // backward error, valid on [m, n) for b(k-1)
  for (std::size_t m = 1; m <= order; ++m) {
    Complex num{0.0, 0.0};
    double den = 0.0;
    for (std::size_t k = m; k < n; ++k) {
      num += f[k] * std::conj(b[k - 1]);
      den += std::norm(f[k]) + std::norm(b[k - 1]);
    }
    if (!(den > 0.0)) throw NumericError("burg_estimate: zero error energy");
    const Complex km = -2.0 * num / den;

    CVector next(m + 1);
    next[0] = 1.0;
    for (std::size_t i = 1; i < m; ++i) next[i] = monic[i] + km * std::conj(monic[m - i]);
    next[m] = km;
    monic = std::move(next);
    model.reflection_history.push_back(-km);
    model.error_power *= 1.0 - std::norm(km);

    for (std::size_t k = n; k-- > m;) {
      const Complex fk = f[k];
      const Complex bk1 = b[k - 1];
      f[k] = fk + km * bk1;
      b[k] = bk1 + std::conj(km) * fk;
    }
  }
  model.coefficients.resize(order);
  for (std::size_t i = 0; i < order; ++i) model.coefficients[i] = -monic[i + 1];
  return model;
}

/// Maximum-entropy PSD S(f) = T P / |1 - sum_i C_i exp(-j 2 pi i f T)|^2 on a
/// uniform grid over one PRF interval; integrates to the process power.
inline std::vector<double> mem_psd(const ArModel& model, double prf_hz, std::size_t grid) {
  if (grid < 2) throw ConfigError("mem_psd: grid must be >= 2");
  const double t = 1.0 / prf_hz;
  std::vector<double> s(grid);
  for (std::size_t i = 0; i < grid; ++i) {
    const double f = static_cast<double>(i) * prf_hz / static_cast<double>(grid);
    Complex a{1.0, 0.0};
    for (std::size_t k = 1; k <= model.order; ++k)
      a -= model.coefficients[k - 1] *
           std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) * f * t);
    s[i] = t * model.error_power / std::norm(a);
  }
  return s;
}

/// Prediction error e(n) = x(n) - sum_i C_i x(n-i) for n = order..len-1.
/// For AR inputs matching the model this reproduces the white innovation.
inline CVector prediction_error_filter(const ArModel& model, const CVector& x) {
  if (x.size() <= model.order)
    throw OrderTooHigh("prediction_error_filter: input shorter than order");
  if (model.order == 0) return x;
  CVector e(x.size() - model.order);
  for (std::size_t n = model.order; n < x.size(); ++n) {
    Complex acc = x[n];
    for (std::size_t i = 1; i <= model.order; ++i)
      acc -= model.coefficients[i - 1] * x[n - i];
    e[n - model.order] = acc;
  }
  return e;
}

}  // namespace mti
