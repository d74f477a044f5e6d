#pragma once

#include <cmath>

#include "mti/matrix.hpp"
#include "mti/types.hpp"

namespace mti {

// Stochastic-gradient and recursive weight updaters. All steps share the
// error convention e = d - x^H w, so the reference-free canceller mode
// (d = 0) updates along -x (x^H w), the descent direction of w^H R w.

struct LmsState {
  CVector w;
  double step_base = 0.0;  // mu
};

/// w <- w + mu x (d - x^H w).
inline void lms_step(LmsState& state, const CVector& x, Complex d) {
  if (x.size() != state.w.size()) throw LengthMismatch("lms_step: length mismatch");
  const Complex e = d - dot(x, state.w);
  axpy(state.step_base * e, x, state.w);
}

struct NlmsState {
  CVector w;
  double step_base = 0.0;  // mu_0
};

/// As lms_step with the trace-bound normalized step mu = mu_0 / (x^H x).
inline void nlms_step(NlmsState& state, const CVector& x, Complex d) {
  if (x.size() != state.w.size()) throw LengthMismatch("nlms_step: length mismatch");
  const double p = norm2(x);
  if (!(p > 0.0)) throw ZeroSnapshot("nlms_step: zero snapshot");
  const Complex e = d - dot(x, state.w);
  axpy(state.step_base / p * e, x, state.w);
}

/// Frost's linearly-constrained LMS: reference-free power minimization with
/// the affine projection that keeps w^H s = 1 after every step.
struct FrostState {
  CVector w;
  CVector s;
  double step_base = 0.0;  // mu_0; effective step is 2 mu_0 / (x^H x)
  double s_norm2 = 0.0;

  FrostState(CVector w0, CVector steering, double mu0)
      : w(std::move(w0)), s(std::move(steering)), step_base(mu0), s_norm2(norm2(s)) {
    if (!(s_norm2 > 0.0)) throw ZeroSteering("FrostState: zero steering");
    if (w.size() != s.size()) throw LengthMismatch("FrostState: length mismatch");
  }
};

inline void frost_lclms_step(FrostState& state, const CVector& x) {
  if (x.size() != state.w.size()) throw LengthMismatch("frost_lclms_step: length mismatch");
  const double p = norm2(x);
  if (!(p > 0.0)) throw ZeroSnapshot("frost_lclms_step: zero snapshot");
  const double mu = 2.0 * state.step_base / p;
  // w <- P e + f with e = w - mu (x^H w) x, P = I - s s^H / (s^H s),
  // f = s / (s^H s); folded into e + s (1 - s^H e) / (s^H s).
  CVector e = state.w;
  axpy(-mu * dot(x, state.w), x, e);
  const Complex she = dot(state.s, e);
  axpy((Complex{1.0, 0.0} - she) / state.s_norm2, state.s, e);
  state.w = std::move(e);
}

/// Quadratically-constrained LMS: per-step Lagrange multiplier
/// lambda = |x^H w|^2 / |s^H w|^2 and update
/// w <- w - mu [x (x^H w) - lambda s (s^H w)], mu = 2 mu_0 / (x^H x).
/// At fixed points (R - lambda s s^H) w = 0, the principal generalized
/// eigenvector, i.e. the Wiener direction.
struct QuadLmsState {
  CVector w;
  CVector s;
  double step_base = 0.0;  // mu_0
  bool normalize = false;  // renormalize ||w|| = 1 after each step

  QuadLmsState(CVector w0, CVector steering, double mu0, bool renorm = false)
      : w(std::move(w0)), s(std::move(steering)), step_base(mu0), normalize(renorm) {
    if (!(norm2(s) > 0.0)) throw ZeroSteering("QuadLmsState: zero steering");
    if (w.size() != s.size()) throw LengthMismatch("QuadLmsState: length mismatch");
  }
};

inline void quad_lms_step(QuadLmsState& state, const CVector& x) {
  if (x.size() != state.w.size()) throw LengthMismatch("quad_lms_step: length mismatch");
  const double p = norm2(x);
  if (!(p > 0.0)) throw ZeroSnapshot("quad_lms_step: zero snapshot");
  const Complex shw = dot(state.s, state.w);
  if (std::abs(shw) < 1e-300)
    throw ConstraintDirectionCollapse("quad_lms_step: s^H w collapsed");
  const Complex xhw = dot(x, state.w);
  const double lambda = std::norm(xhw) / std::norm(shw);
  const double mu = 2.0 * state.step_base / p;
  axpy(-mu * xhw, x, state.w);
  axpy(mu * lambda * shw, state.s, state.w);
  if (state.normalize) {
    const double nw = std::sqrt(norm2(state.w));
    for (auto& c : state.w) c /= nw;
  }
}

/// Exponentially-weighted recursive least squares.
struct RlsState {
  CVector w;
  ComplexMatrix p;          // inverse-covariance estimate, Hermitian
  double forgetting = 1.0;  // lambda_f in (0, 1]

  RlsState(std::size_t n, double delta_inv, double lambda_f)
      : w(n, Complex{0.0, 0.0}), p(ComplexMatrix::identity(n)), forgetting(lambda_f) {
    if (!(lambda_f > 0.0 && lambda_f <= 1.0))
      throw ConfigError("RlsState: forgetting must be in (0, 1]");
    for (std::size_t i = 0; i < n; ++i) p(i, i) = delta_inv;
  }
};

/// k = lambda^{-1} P x / (1 + lambda^{-1} x^H P x); P <- lambda^{-1}(P - k x^H P);
/// e = d - w^H x; w <- w + k e*. P is re-symmetrized every step.
inline void rls_step(RlsState& state, const CVector& x, Complex d) {
  const std::size_t n = state.w.size();
  if (x.size() != n) throw LengthMismatch("rls_step: length mismatch");
  const double il = 1.0 / state.forgetting;
  CVector px = mat_vec(state.p, x);
  const Complex xhpx = dot(x, px);  // real for Hermitian P
  const double denom = 1.0 + il * xhpx.real();
  CVector k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = il * px[i] / denom;
  // x^H P = (P x)^H for Hermitian P
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      state.p(i, j) = il * (state.p(i, j) - k[i] * std::conj(px[j]));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Complex s = 0.5 * (state.p(i, j) + std::conj(state.p(j, i)));
      state.p(i, j) = s;
      state.p(j, i) = std::conj(s);
    }
  }
  const Complex e = d - dot(state.w, x);
  axpy(std::conj(e), k, state.w);
}

}  // namespace mti
