#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace bcover {

// Exponent guard rails: |x|^(p-1) loses all accuracy for p near 1 or huge p.
inline constexpr double kMinExponent = 1.0 + 1e-6;
inline constexpr double kMaxExponent = 1e6;

// Absolute-plus-relative tolerance used by every analytic identity check.
inline double identity_tol(double magnitude) { return 1e-9 * (1.0 + magnitude); }

// "On the boundary" band for the r-sphere / cylinder shell.
inline double boundary_tol(double r) { return 1e-9 * (1.0 + r); }

inline double conjugate_exponent(double p) { return p / (p - 1.0); }

inline bool conjugate_pair(double p, double q) {
  return std::abs(1.0 / p + 1.0 / q - 1.0) <= 1e-12;
}

}  // namespace bcover
