#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "mti/linalg.hpp"
#include "mti/matrix.hpp"
#include "mti/rng.hpp"
#include "mti/types.hpp"

namespace mti {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

/// Two-way Doppler shift 2 v_r f0 / c.
inline double doppler_shift(double v_radial_mps, double carrier_hz) {
  if (!(carrier_hz > 0.0)) throw NumericError("doppler_shift: carrier must be positive");
  return 2.0 * v_radial_mps * carrier_hz / kSpeedOfLight;
}

enum class ClutterDomain { Temporal, Spatial };

/// One Gaussian-shaped spectral mode (temporal) or one far-field point
/// interferer (spatial). `location` is a center frequency in Hz for the
/// temporal domain and an arrival angle in degrees for the spatial domain.
struct ClutterMode {
  double location = 0.0;
  double spectral_width_hz = 0.0;  // half-power width; temporal domain only
  double power_fraction = 0.0;
};

struct ClutterModel {
  ClutterDomain domain = ClutterDomain::Temporal;
  std::vector<ClutterMode> modes;
  double total_interference_power = 0.0;  // linear
  double noise_power = 0.0;               // linear, sigma^2
  double prf_hz = 0.0;                    // temporal domain only
  std::size_t n = 0;                      // burst length / element count

  void validate() const {
    if (n == 0) throw ConfigError("ClutterModel: n must be positive");
    if (noise_power < 0.0) throw ConfigError("ClutterModel: negative noise power");
    if (total_interference_power < 0.0)
      throw ConfigError("ClutterModel: negative interference power");
    if (domain == ClutterDomain::Temporal && !(prf_hz > 0.0))
      throw ConfigError("ClutterModel: prf must be positive for temporal domain");
    double sum = 0.0;
    for (const auto& m : modes) sum += m.power_fraction;
    if (!modes.empty() && std::abs(sum - 1.0) > 1e-12)
      throw ConfigError("ClutterModel: mode power fractions must sum to 1");
  }
};

/// Pulse-train steering for Doppler f_d: element k = exp(j 2 pi f_d k / prf),
/// scaled so that ||s||^2 = n.
inline CVector temporal_steering(std::size_t n, double doppler_hz, double prf_hz) {
  if (n == 0) throw LengthMismatch("temporal_steering: n must be >= 1");
  CVector s(n);
  const double step = 2.0 * std::numbers::pi * doppler_hz / prf_hz;
  for (std::size_t k = 0; k < n; ++k) s[k] = std::polar(1.0, step * static_cast<double>(k));
  // unit-modulus entries already give ||s||^2 = n; normalize exactly anyway
  const double scale = std::sqrt(static_cast<double>(n) / norm2(s));
  for (auto& c : s) c *= scale;
  return s;
}

/// Half-wavelength array steering for arrival angle theta (degrees), with the
/// phase reference at the array center: element k = exp(j pi sin(theta) (k - (n-1)/2)).
inline CVector spatial_steering(std::size_t n, double theta_deg) {
  if (n == 0) throw LengthMismatch("spatial_steering: n must be >= 1");
  if (!(std::abs(theta_deg) < 90.0))
    throw NumericError("spatial_steering: |theta| must be < 90 degrees");
  const double phi = std::numbers::pi * std::sin(theta_deg * std::numbers::pi / 180.0);
  CVector s(n);
  const double mid = 0.5 * static_cast<double>(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    s[k] = std::polar(1.0, phi * (static_cast<double>(k) - mid));
  const double scale = std::sqrt(static_cast<double>(n) / norm2(s));
  for (auto& c : s) c *= scale;
  return s;
}

/// Gaussian-spectrum pulse-to-pulse correlation: lag-k entry
/// r[k] = sum_l P_l rho_l^{k^2} exp(j 2 pi f_l k / prf) with
/// sigma_f^2 = df^2 / (2 * 2.77) and rho = exp(-2 (pi sigma_f / prf)^2).
/// Noise is not included; callers add noise_power * I.
inline ToeplitzSpec clutter_covariance_temporal(const ClutterModel& model) {
  model.validate();
  if (model.domain != ClutterDomain::Temporal)
    throw ConfigError("clutter_covariance_temporal: model is not temporal");
  CVector r(model.n, Complex{0.0, 0.0});
  for (const auto& mode : model.modes) {
    const double sigma_f2 = mode.spectral_width_hz * mode.spectral_width_hz / 2.77 / 2.0;
    const double rho =
        std::exp(-2.0 * std::pow(std::numbers::pi * std::sqrt(sigma_f2) / model.prf_hz, 2.0));
    const double power = mode.power_fraction * model.total_interference_power;
    const double om = 2.0 * std::numbers::pi * mode.location / model.prf_hz;
    for (std::size_t k = 0; k < model.n; ++k) {
      const double kk = static_cast<double>(k);
      r[k] += power * std::pow(rho, kk * kk) * std::polar(1.0, om * kk);
    }
  }
  return ToeplitzSpec{model.n, std::move(r)};
}

/// Spatial interference covariance R = sum_l P_l e_l e_l^H (noise excluded).
inline HermitianMatrix clutter_covariance_spatial(const ClutterModel& model) {
  model.validate();
  if (model.domain != ClutterDomain::Spatial)
    throw ConfigError("clutter_covariance_spatial: model is not spatial");
  ComplexMatrix r(model.n, model.n);
  for (const auto& mode : model.modes) {
    const CVector e = spatial_steering(model.n, mode.location);
    const double power = mode.power_fraction * model.total_interference_power;
    for (std::size_t i = 0; i < model.n; ++i)
      for (std::size_t j = 0; j < model.n; ++j)
        r(i, j) += power * e[i] * std::conj(e[j]);
  }
  // products above are Hermitian up to rounding; symmetrize exactly
  for (std::size_t i = 0; i < model.n; ++i) {
    for (std::size_t j = i + 1; j < model.n; ++j) {
      const Complex s = 0.5 * (r(i, j) + std::conj(r(j, i)));
      r(i, j) = s;
      r(j, i) = std::conj(s);
    }
    r(i, i) = Complex{r(i, i).real(), 0.0};
  }
  return HermitianMatrix::unchecked(std::move(r));
}

/// Interference covariance in dense form for either domain (noise excluded).
inline HermitianMatrix clutter_covariance(const ClutterModel& model) {
  return model.domain == ClutterDomain::Temporal
             ? clutter_covariance_temporal(model).to_dense()
             : clutter_covariance_spatial(model);
}

struct Snapshot {
  CVector values;
};

/// N x M complex snapshot matrix; columns are snapshots.
struct TrainingSet {
  ComplexMatrix snapshots;
  std::uint64_t rng_seed = 0;

  std::size_t n() const { return snapshots.rows(); }
  std::size_t m() const { return snapshots.cols(); }
  CVector snapshot(std::size_t j) const { return snapshots.col(j); }
};

enum class AmplitudeLaw { RayleighUnitMean, Constant };

/// Target contamination of the training set: each snapshot receives
/// A exp(j phi) sqrt(power) * steering with an independent amplitude A and
/// uniform phase phi per snapshot.
struct TargetSpec {
  CVector steering;  // ||steering||^2 = n convention
  double power = 0.0;
  AmplitudeLaw amplitude_law = AmplitudeLaw::RayleighUnitMean;
};

/// Draws M snapshots: column = L g + eta (+ target term), where
/// L L^H = clutter covariance + 1e-12-scale jitter, g is CN(0, I) and eta is
/// white noise with variance sigma^2 split equally between I and Q.
/// Identical (model, m, target, seed) gives bit-identical output.
inline TrainingSet generate_training_set(const ClutterModel& model, std::size_t m,
                                         const std::optional<TargetSpec>& target,
                                         std::uint64_t seed) {
  model.validate();
  if (m == 0) throw ConfigError("generate_training_set: m must be >= 1");
  const std::size_t n = model.n;
  if (target && target->steering.size() != n)
    throw LengthMismatch("generate_training_set: target steering length mismatch");

  const bool clutter_on = model.total_interference_power > 0.0 && !model.modes.empty();
  ComplexMatrix l;
  if (clutter_on) {
    const HermitianMatrix r = clutter_covariance(model);
    // Jitter handles the rank-deficient limit; it is applied at the matrix's
    // own scale and the factorization accepts any positive pivot.
    const double jitter = 1e-12 * std::max(1.0, r.max_diag());
    l = cholesky_lower(r.plus_scaled_identity(jitter), 0.0);
  }

  Rng rng(seed);
  ComplexMatrix x(n, m);
  CVector g(n);
  const double noise_amp = std::sqrt(model.noise_power / 2.0);
  for (std::size_t j = 0; j < m; ++j) {
    CVector col(n, Complex{0.0, 0.0});
    if (clutter_on) {
      for (auto& c : g) c = rng.cnormal();
      col = mat_vec(l, g);
    }
    if (model.noise_power > 0.0)
      for (std::size_t i = 0; i < n; ++i)
        col[i] += Complex{noise_amp * rng.normal(), noise_amp * rng.normal()};
    if (target) {
      const double a = target->amplitude_law == AmplitudeLaw::RayleighUnitMean
                           ? std::sqrt(2.0 / std::numbers::pi) * rng.rayleigh(1.0)
                           : 1.0;
      const double phi = rng.uniform_phase();
      const Complex c = std::polar(a * std::sqrt(target->power), phi);
      for (std::size_t i = 0; i < n; ++i) col[i] += c * target->steering[i];
    }
    x.set_col(j, col);
  }
  return TrainingSet{std::move(x), seed};
}

}  // namespace mti
