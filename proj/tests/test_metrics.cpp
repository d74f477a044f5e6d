#include <catch2/catch_amalgamated.hpp>

#include "mti/metrics.hpp"
#include "mti/solvers.hpp"
#include "oracles.hpp"

using namespace mti;
using Catch::Approx;

namespace {

ClutterModel two_mode_model(std::size_t n, double interference_power, double noise_power) {
  ClutterModel m;
  m.domain = ClutterDomain::Temporal;
  m.modes = {ClutterMode{0.0, 500.0, 0.5}, ClutterMode{1003.0, 500.0, 0.5}};
  m.total_interference_power = interference_power;
  m.noise_power = noise_power;
  m.prf_hz = 20000.0;
  m.n = n;
  return m;
}

}  // namespace

TEST_CASE("output_sinr: coherent-integration gain N P / sigma^2", "[metrics]") {
  const std::size_t n = 8;
  const double p = 2.5, sigma2 = 0.25;
  auto s = temporal_steering(n, 4000.0, 20000.0);
  auto s_scaled = scaled(s, Complex{std::sqrt(p), 0.0});
  auto r = HermitianMatrix::identity_scaled(n, sigma2);
  const double sinr = output_sinr_linear(s, s_scaled, r);
  REQUIRE(sinr == Approx(static_cast<double>(n) * p / sigma2).epsilon(1e-12));
}

TEST_CASE("output_sinr: scale invariance and the quadratic-form identity", "[metrics]") {
  auto model = two_mode_model(8, 4.0, 1e-3);
  auto r = clutter_covariance(model).plus_scaled_identity(model.noise_power);
  const double p = 1e-2;
  auto s = temporal_steering(8, 4000.0, 20000.0);
  auto s_scaled = scaled(s, Complex{std::sqrt(p), 0.0});

  auto w = optimal_weights(r, s_scaled);
  const double base = output_sinr(w.values, s_scaled, r);
  REQUIRE(output_sinr(scaled(w.values, Complex{0.0, 7.0}), s_scaled, r) ==
          Approx(base).margin(1e-12));

  // optimal SINR equals s^H R^{-1} s with the amplitude-carrying steering
  const CVector rinv_s = oracle::gauss_solve(r.matrix(), s_scaled);
  const double want = to_db(dot(s_scaled, rinv_s).real());
  REQUIRE(base == Approx(want).margin(1e-9));
}

TEST_CASE("output_sinr: the optimal weights maximize the quotient", "[metrics]") {
  auto model = two_mode_model(8, 4.0, 1e-3);
  auto r = clutter_covariance(model).plus_scaled_identity(model.noise_power);
  auto s = temporal_steering(8, 4000.0, 20000.0);
  auto w_opt = optimal_weights(r, s);
  const double best = output_sinr_linear(w_opt.values, s, r);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    CVector w(8);
    for (auto& c : w) c = rng.cnormal();
    REQUIRE(output_sinr_linear(w, s, r) <= best * (1.0 + 1e-12));
  }
}

TEST_CASE("clutter_attenuation / improvement factor identities", "[metrics]") {
  Rng rng(15);
  // scalar covariance: K_p = 1 for any weights
  auto rc = HermitianMatrix::identity_scaled(6, 3.0);
  CVector w(6);
  for (auto& c : w) c = rng.cnormal();
  REQUIRE(clutter_attenuation(w, rc) == Approx(1.0).epsilon(1e-12));

  auto model = two_mode_model(6, 2.0, 1e-3);
  auto r_clutter = clutter_covariance(model);
  auto s = temporal_steering(6, 4000.0, 20000.0);
  const double kp = clutter_attenuation(w, r_clutter);
  const double qc = signal_gain(w, s);
  REQUIRE(improvement_factor(w, s, r_clutter) == Approx(qc * kp).epsilon(1e-12));

  const double ku = improvement_factor(w, s, r_clutter);
  REQUIRE(subclutter_visibility(ku, ku) == Approx(1.0).epsilon(1e-12));
  REQUIRE_THROWS_AS(subclutter_visibility(ku, 0.0), ZeroPower);
}

TEST_CASE("observability: ratio of target power to summed interference", "[metrics]") {
  const std::vector<double> comps{1.0, 2.0, 3.0};
  REQUIRE(observability(12.0, comps) == Approx(2.0).epsilon(1e-14));
  const std::vector<double> zeros{0.0, 0.0};
  REQUIRE_THROWS_AS(observability(1.0, zeros), ZeroPower);
}

TEST_CASE("beampattern: uniform weights give a Dirichlet pattern", "[metrics]") {
  const std::size_t n = 8, grid = 64;
  CVector w(n, Complex{1.0, 0.0});
  auto g = beampattern(w, grid);
  REQUIRE(g.angles_deg.size() == g.gains_db.size());
  // angles strictly increasing in (-90, 90)
  for (std::size_t i = 1; i < g.angles_deg.size(); ++i)
    REQUIRE(g.angles_deg[i] > g.angles_deg[i - 1]);
  REQUIRE(g.angles_deg.front() > -90.0);
  REQUIRE(g.angles_deg.back() < 90.0);

  // peak 0 dB at broadside
  std::size_t i0 = 0;
  for (std::size_t i = 0; i < g.angles_deg.size(); ++i)
    if (std::abs(g.angles_deg[i]) < std::abs(g.angles_deg[i0])) i0 = i;
  REQUIRE(g.angles_deg[i0] == Approx(0.0).margin(1e-12));
  REQUIRE(g.gains_db[i0] == Approx(0.0).margin(1e-10));

  // first null at sin(theta) = 2/8 -> asin(0.25) = 14.4775 degrees
  const double null_angle = std::asin(0.25) * 180.0 / std::numbers::pi;
  std::size_t in = 0;
  for (std::size_t i = 0; i < g.angles_deg.size(); ++i)
    if (std::abs(g.angles_deg[i] - null_angle) < std::abs(g.angles_deg[in] - null_angle))
      in = i;
  REQUIRE(g.angles_deg[in] == Approx(null_angle).margin(1e-9));
  REQUIRE(g.gains_db[in] < -200.0);
}

TEST_CASE("beampattern: steering shift property and scaling offset", "[metrics]") {
  const std::size_t n = 16, grid = 256;
  auto w = spatial_steering(n, 30.0);
  auto g = beampattern(w, grid);
  std::size_t imax = 0;
  for (std::size_t i = 0; i < g.gains_db.size(); ++i)
    if (g.gains_db[i] > g.gains_db[imax]) imax = i;
  // peak within one grid bin of 30 degrees
  const double bin_u = 2.0 / static_cast<double>(grid);
  const double u_peak = std::sin(g.angles_deg[imax] * std::numbers::pi / 180.0);
  REQUIRE(std::abs(u_peak - std::sin(30.0 * std::numbers::pi / 180.0)) <= bin_u + 1e-12);

  // 20 log10|c| offset away from the cancellation-dominated null bins
  auto g2 = beampattern(scaled(w, Complex{0.1, 0.0}), grid);
  for (std::size_t i = 0; i < g.gains_db.size(); ++i)
    if (g.gains_db[i] > -120.0)
      REQUIRE(g2.gains_db[i] - g.gains_db[i] == Approx(-20.0).margin(1e-9));

  REQUIRE_THROWS_AS(beampattern(w, n), ConfigError);
}
