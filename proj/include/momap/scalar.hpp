#pragma once

#include <cmath>

namespace momap {

// Removable-singularity functions. Below the cutoff the four-term Taylor
// polynomial is used; above it the closed form (via expm1 where it helps).
inline constexpr double kTaylorCutoff = 1e-4;

/// η(t) = sqrt((1 − e^{−t}) / t), η(0) = 1.
inline double eta(double t) {
  if (std::abs(t) < kTaylorCutoff) {
    const double inner = 1.0 - t / 2.0 + t * t / 6.0 - t * t * t / 24.0;
    return std::sqrt(inner);
  }
  return std::sqrt(-std::expm1(-t) / t);
}

/// ψ(t) = (e^t − 1) / t, ψ(0) = 1.
inline double psi(double t) {
  if (std::abs(t) < kTaylorCutoff) return 1.0 + t / 2.0 + t * t / 6.0 + t * t * t / 24.0;
  return std::expm1(t) / t;
}

/// θ(t) = 2t / (e^t − e^{−t}) = t / sinh t, θ(0) = 1.
inline double theta(double t) {
  if (std::abs(t) < kTaylorCutoff) {
    const double t2 = t * t;
    return 1.0 - t2 / 6.0 + 7.0 * t2 * t2 / 360.0 - 31.0 * t2 * t2 * t2 / 15120.0;
  }
  if (std::abs(t) > 710.0) return 0.0;
  return t / std::sinh(t);
}

/// 1/sqrt(t) for t > 0, zero otherwise.
inline double phi_sqrtinv(double t) { return t > 0.0 ? 1.0 / std::sqrt(t) : 0.0; }

}  // namespace momap
