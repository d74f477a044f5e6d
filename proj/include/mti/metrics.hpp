#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "mti/matrix.hpp"
#include "mti/types.hpp"

namespace mti {

inline double to_db(double linear) { return 10.0 * std::log10(linear); }
inline double from_db(double db) { return std::pow(10.0, db / 10.0); }

/// Output SINR Rayleigh quotient |w^H s|^2 / (w^H R w) in linear power; the
/// steering carries the signal amplitude and R is the true
/// interference-plus-noise covariance. Scale invariant in w.
inline double output_sinr_linear(const CVector& w, const CVector& s_scaled,
                                 const HermitianMatrix& r_true) {
  const double denom = quad_form(r_true, w);
  if (!(denom > 0.0))
    throw NotPositiveDefinite("output_sinr: w^H R w not positive");
  return std::norm(dot(w, s_scaled)) / denom;
}

inline double output_sinr(const CVector& w, const CVector& s_scaled,
                          const HermitianMatrix& r_true) {
  return to_db(output_sinr_linear(w, s_scaled, r_true));
}

inline double output_sinr(const WeightVector& w, const CVector& s_scaled,
                          const HermitianMatrix& r_true) {
  return output_sinr(w.values, s_scaled, r_true);
}

/// Clutter suppression ratio K_p = P_in / P_out with the per-element input
/// power trace(R_c)/N and the output power normalized per unit ||w||^2.
inline double clutter_attenuation(const CVector& w, const HermitianMatrix& r_clutter) {
  const double p_in = r_clutter.trace_real() / static_cast<double>(r_clutter.dim());
  const double p_out = quad_form(r_clutter, w);
  if (!(p_in > 0.0) || !(p_out > 0.0)) throw ZeroPower("clutter_attenuation: zero power");
  return p_in * norm2(w) / p_out;
}

/// Normalized signal power gain q_c = |w^H s|^2 / (||s||^2 ||w||^2).
inline double signal_gain(const CVector& w, const CVector& s) {
  const double denom = norm2(s) * norm2(w);
  if (!(denom > 0.0)) throw ZeroPower("signal_gain: zero power");
  return std::norm(dot(w, s)) / denom;
}

/// Improvement factor K_u = q_c * K_p.
inline double improvement_factor(const CVector& w, const CVector& s,
                                 const HermitianMatrix& r_clutter) {
  return signal_gain(w, s) * clutter_attenuation(w, r_clutter);
}

/// Subclutter visibility K_pv = K_u / q_threshold.
inline double subclutter_visibility(double improvement, double q_threshold) {
  if (!(q_threshold > 0.0)) throw ZeroPower("subclutter_visibility: zero threshold");
  return improvement / q_threshold;
}

/// Observability q_n = P_target / sum_i P_interference_i.
inline double observability(double p_target, std::span<const double> p_interf_components) {
  double total = 0.0;
  for (double p : p_interf_components) total += p;
  if (!(total > 0.0)) throw ZeroPower("observability: zero interference power");
  return p_target / total;
}

/// Antenna/Doppler response on an angle grid, in dB.
struct PatternGrid {
  std::vector<double> angles_deg;  // strictly increasing in (-90, 90)
  std::vector<double> gains_db;
};

/// Zero-padded DFT power pattern |DFT(w)|^2 / n^2 with bins rotated by half a
/// grid and mapped through theta = asin(2(f - 1/2)); bins that would map
/// outside the open (-90, 90) interval are dropped.
inline std::pair<std::vector<double>, std::vector<double>> beampattern_power(
    const CVector& w, std::size_t grid_size) {
  const std::size_t n = w.size();
  if (grid_size < 2 * n) throw ConfigError("beampattern: grid_size must be >= 2n");
  std::vector<double> angles;
  std::vector<double> powers;
  angles.reserve(grid_size);
  powers.reserve(grid_size);
  const double inv_n2 = 1.0 / (static_cast<double>(n) * static_cast<double>(n));
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(grid_size);
    const double u = 2.0 * (f - 0.5);
    if (!(std::abs(u) < 1.0)) continue;
    // rotated bin: position i displays DFT bin (i + grid/2) mod grid
    const std::size_t bin = (i + grid_size / 2) % grid_size;
    Complex acc{0.0, 0.0};
    const double om = -2.0 * std::numbers::pi * static_cast<double>(bin) /
                      static_cast<double>(grid_size);
    for (std::size_t k = 0; k < n; ++k)
      acc += w[k] * std::polar(1.0, om * static_cast<double>(k));
    angles.push_back(std::asin(u) * 180.0 / std::numbers::pi);
    powers.push_back(std::norm(acc) * inv_n2);
  }
  return {std::move(angles), std::move(powers)};
}

inline PatternGrid beampattern(const CVector& w, std::size_t grid_size) {
  auto [angles, powers] = beampattern_power(w, grid_size);
  PatternGrid g;
  g.angles_deg = std::move(angles);
  g.gains_db.resize(powers.size());
  for (std::size_t i = 0; i < powers.size(); ++i)
    g.gains_db[i] = to_db(std::max(powers[i], 1e-300));
  return g;
}

inline PatternGrid beampattern(const WeightVector& w, std::size_t grid_size) {
  return beampattern(w.values, grid_size);
}

}  // namespace mti
