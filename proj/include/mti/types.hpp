#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mti {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Numeric failures raised by solvers and estimators.
struct NumericError : Error {
  using Error::Error;
};

struct NotPositiveDefinite : NumericError {
  using NumericError::NumericError;
};
struct SingularSystem : NumericError {
  using NumericError::NumericError;
};
struct DegenerateDirection : NumericError {
  using NumericError::NumericError;
};
struct ConstraintDirectionCollapse : NumericError {
  using NumericError::NumericError;
};
struct ZeroSnapshot : NumericError {
  using NumericError::NumericError;
};
struct ZeroSteering : NumericError {
  using NumericError::NumericError;
};
struct ZeroPower : NumericError {
  using NumericError::NumericError;
};
struct NegativeLoading : NumericError {
  using NumericError::NumericError;
};
struct OrderTooHigh : NumericError {
  using NumericError::NumericError;
};
struct LengthMismatch : NumericError {
  using NumericError::NumericError;
};

/// Configuration / input-file errors (CLI exit code 2).
struct ConfigError : Error {
  using Error::Error;
};

struct ParseError : ConfigError {
  ParseError(const std::string& what, int line_number, std::string field_name)
      : ConfigError(what), line(line_number), field(std::move(field_name)) {}
  int line = 0;
  std::string field;
};

struct IoError : Error {
  using Error::Error;
};

enum class AlgorithmTag { Optimal, Smi, Rsmi, FrostLms, QuadLms, Lms, Nlms, Rls, Mem };

inline const char* to_string(AlgorithmTag tag) {
  switch (tag) {
    case AlgorithmTag::Optimal: return "OPTIMAL";
    case AlgorithmTag::Smi: return "SMI";
    case AlgorithmTag::Rsmi: return "RSMI";
    case AlgorithmTag::FrostLms: return "FROST_LMS";
    case AlgorithmTag::QuadLms: return "QUAD_LMS";
    case AlgorithmTag::Lms: return "LMS";
    case AlgorithmTag::Nlms: return "NLMS";
    case AlgorithmTag::Rls: return "RLS";
    case AlgorithmTag::Mem: return "MEM";
  }
  return "?";
}

/// Filter weights tagged by the algorithm that produced them.
struct WeightVector {
  CVector values;
  AlgorithmTag tag = AlgorithmTag::Optimal;

  std::size_t size() const { return values.size(); }
};

// ---- small vector helpers shared across modules ----

/// Conjugate-linear inner product a^H b.
inline Complex dot(const CVector& a, const CVector& b) {
  if (a.size() != b.size()) throw LengthMismatch("dot: length mismatch");
  Complex acc{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

/// Squared Euclidean norm ||v||^2.
inline double norm2(const CVector& v) {
  double acc = 0.0;
  for (const Complex& c : v) acc += std::norm(c);
  return acc;
}

inline CVector scaled(const CVector& v, Complex c) {
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

inline void axpy(Complex a, const CVector& x, CVector& y) {
  if (x.size() != y.size()) throw LengthMismatch("axpy: length mismatch");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

inline bool all_finite(const CVector& v) {
  for (const Complex& c : v)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  return true;
}

}  // namespace mti
