#pragma once
// Test-only gamma oracle, implemented independently of the library code path:
// upward recursion Gamma(z) = Gamma(z+m) / (z (z+1) ... (z+m-1)) into the
// region Re >= 24, then the Stirling log-series with twelve Bernoulli terms.
// At |w| >= 24 the truncation error of the series is far below double
// roundoff, so this is an exact-to-double reference for the Lanczos code.

#include <cmath>
#include <complex>
#include <numbers>

namespace oracle {

using cplx = std::complex<double>;

inline cplx log_gamma_stirling(cplx w) {
  // B_{2k} / (2k (2k-1)) for k = 1..12.
  static const double coeff[12] = {
      1.0 / 12.0,
      -1.0 / 360.0,
      1.0 / 1260.0,
      -1.0 / 1680.0,
      1.0 / 1188.0,
      -691.0 / 360360.0,
      1.0 / 156.0,
      -3617.0 / 122400.0,
      43867.0 / 244188.0,
      -174611.0 / 125400.0,
      77683.0 / 5796.0,
      -236364091.0 / 1506960.0,
  };
  const cplx w2 = w * w;
  cplx inv = 1.0 / w;
  cplx series = 0.0;
  for (double c : coeff) {
    series += c * inv;
    inv /= w2;
  }
  const double half_log_2pi = 0.91893853320467274178032973640562;
  return (w - 0.5) * std::log(w) - w + half_log_2pi + series;
}

inline cplx gamma(cplx z) {
  if (z.real() < 0.5) {
    // Reflection keeps the recursion short and avoids the poles on entry.
    const double pi = std::numbers::pi;
    return pi / (std::sin(pi * z) * gamma(1.0 - z));
  }
  cplx shift = 1.0;
  while (z.real() < 24.0) {
    shift *= z;
    z += 1.0;
  }
  return std::exp(log_gamma_stirling(z)) / shift;
}

}  // namespace oracle
