#pragma once
// First-order multi-direction jets: truncated polynomials in d nilpotent
// directions u_1..u_d with u_k^2 = 0, coefficients indexed by subset masks.
// Multiplying jets is subset convolution; extracting the coefficient of the
// full mask after evaluating a function of jet-valued matrices yields the
// mixed first partial derivative along all directions at once.  This is the
// engine used to apply words of vector fields and multiplication operators.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "glpair/scalars.hpp"

namespace glpair::jets {

using cplx = std::complex<double>;
using scalars::Parity;

class Jet {
 public:
  Jet() : d_(0), c_(1, cplx{0.0}) {}
  explicit Jet(int dirs, cplx value = cplx{0.0})
      : d_(dirs), c_(std::size_t{1} << dirs, cplx{0.0}) {
    c_[0] = value;
  }

  [[nodiscard]] static Jet constant(int dirs, cplx v) { return Jet(dirs, v); }

  /// value + slope * u_dir  (dir is 0-based).
  [[nodiscard]] static Jet with_direction(int dirs, cplx value, int dir,
                                          cplx slope = cplx{1.0}) {
    Jet out(dirs, value);
    out.c_[std::size_t{1} << dir] = slope;
    return out;
  }

  [[nodiscard]] int dirs() const { return d_; }
  [[nodiscard]] cplx value() const { return c_[0]; }
  [[nodiscard]] cplx coeff(std::size_t mask) const { return c_[mask]; }
  cplx& coeff(std::size_t mask) { return c_[mask]; }
  /// Coefficient of u_1 u_2 ... u_d: the full mixed derivative.
  [[nodiscard]] cplx top() const { return c_.back(); }

  Jet& operator+=(const Jet& o) { return merge(o, +1); }
  Jet& operator-=(const Jet& o) { return merge(o, -1); }

  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }

  friend Jet operator-(Jet a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    // Promote constants (d == 0) into the other operand's direction space.
    if (a.d_ == 0 && b.d_ != 0) return b * a.c_[0];
    if (b.d_ == 0) return a * b.c_[0];
    if (a.d_ != b.d_) throw std::invalid_argument("Jet product: direction mismatch");
    Jet out(a.d_);
    const std::size_t full = a.c_.size();
    for (std::size_t m = 0; m < full; ++m) {
      cplx acc{0.0};
      std::size_t s = m;
      while (true) {
        acc += a.c_[s] * b.c_[m ^ s];
        if (s == 0) break;
        s = (s - 1) & m;
      }
      out.c_[m] = acc;
    }
    return out;
  }

  friend Jet operator*(Jet a, cplx z) {
    for (auto& x : a.c_) x *= z;
    return a;
  }
  friend Jet operator*(cplx z, Jet a) { return std::move(a) * z; }

 private:
  Jet& merge(const Jet& o, int sgn) {
    if (d_ == 0 && o.d_ != 0) {
      const cplx v = c_[0];
      *this = Jet(o.d_, v);
    }
    if (o.d_ == 0) {
      c_[0] += sgn > 0 ? o.c_[0] : -o.c_[0];
      return *this;
    }
    if (o.d_ != d_) throw std::invalid_argument("Jet sum: direction mismatch");
    for (std::size_t m = 0; m < c_.size(); ++m)
      c_[m] += sgn > 0 ? o.c_[m] : -o.c_[m];
    return *this;
  }

  int d_;
  std::vector<cplx> c_;
};

/// sgn(x)^eps |x|^mu for a jet x whose base value is real and nonzero:
/// x = x0 (1 + u) with u nilpotent, so |x|^mu = |x0|^mu sum_k binom(mu,k) u^k
/// and the sign character only sees the base value.
[[nodiscard]] inline Jet signed_pow(const Jet& x, cplx mu, Parity eps) {
  const cplx x0 = x.value();
  if (x0 == cplx{0.0}) throw std::domain_error("jet signed_pow at zero base");
  const double flip = x0.real() < 0.0 ? -1.0 : 1.0;
  const int d = x.dirs();

  // u = flip*x / (flip*x0) - 1: nilpotent part of the normalized jet.
  Jet u(d);
  for (std::size_t m = 1; m < (std::size_t{1} << d); ++m)
    u.coeff(m) = x.coeff(m) / x0;  // flip cancels in the ratio

  Jet series = Jet::constant(d, 1.0);
  Jet upow = Jet::constant(d, 1.0);
  cplx binom = 1.0;
  for (int k = 1; k <= d; ++k) {
    upow = upow * u;
    binom *= (mu - static_cast<double>(k - 1)) / static_cast<double>(k);
    series += upow * binom;
  }
  const cplx mag = std::exp(mu * std::log(flip * x0));
  const double sign = (eps && flip < 0.0) ? -1.0 : 1.0;
  return series * (sign * mag);
}

}  // namespace glpair::jets
