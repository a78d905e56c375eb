#pragma once
// The distribution kernel attached to a pair of principal-series parameters:
// a product of signed powers of the two corner-minor families, optional
// gamma-factor normalizations, the spherical vector on the larger group, and
// the closed-form constants appearing in the integral functional equations.

#include <complex>
#include <stdexcept>
#include <vector>

#include "glpair/jets.hpp"
#include "glpair/matgroup.hpp"
#include "glpair/params.hpp"
#include "glpair/scalars.hpp"

namespace glpair::kernel {

using cplx = std::complex<double>;
using jets::Jet;
using matgroup::Mat;
using params::PairParams;
using params::SpectralParams;
using scalars::RealCharacter;

enum class Normalization { none, bb, bf };

// ---------------------------------------------------------------------------
// Kernel evaluation
// ---------------------------------------------------------------------------

/// Raw kernel in spectral coordinates at a real matrix point.
[[nodiscard]] inline cplx eval_kernel_spectral(const SpectralParams& sp,
                                               const Mat<double>& g) {
  const int n = sp.n();
  if (g.rows != n + 1 || g.cols != n + 1)
    throw std::invalid_argument("eval_kernel_spectral: matrix size mismatch");
  cplx out{1.0};
  for (int i = 1; i <= n + 1; ++i)
    out *= scalars::signed_pow(matgroup::minor_phi(g, i), sp.s[i - 1],
                               sp.delta[i - 1]);
  for (int j = 1; j <= n; ++j)
    out *= scalars::signed_pow(matgroup::minor_psi(g, j), sp.t[j - 1],
                               sp.eps[j - 1]);
  return out;
}

/// Raw kernel in spectral coordinates at a jet-valued point (for applying
/// differential operators).
[[nodiscard]] inline Jet eval_kernel_spectral(const SpectralParams& sp,
                                              const Mat<Jet>& g) {
  const int n = sp.n();
  if (g.rows != n + 1 || g.cols != n + 1)
    throw std::invalid_argument("eval_kernel_spectral: matrix size mismatch");
  int dirs = 0;
  for (const auto& e : g.a) dirs = std::max(dirs, e.dirs());
  Jet out = Jet::constant(dirs, 1.0);
  for (int i = 1; i <= n + 1; ++i)
    out = out * jets::signed_pow(matgroup::minor_phi(g, i), sp.s[i - 1],
                                 sp.delta[i - 1]);
  for (int j = 1; j <= n; ++j)
    out = out * jets::signed_pow(matgroup::minor_psi(g, j), sp.t[j - 1],
                                 sp.eps[j - 1]);
  return out;
}

struct KernelValue {
  cplx value{0.0};
  bool normalizer_pole = false;  // true: normalizer has a pole, value is exactly 0
};

/// Kernel in representation coordinates, optionally divided by one of the two
/// normalizers.  At parameters where the chosen normalizer has a pole the
/// normalized kernel vanishes identically and the value 0 is returned exactly.
[[nodiscard]] inline KernelValue eval_kernel(const PairParams& p,
                                             const Mat<double>& g,
                                             Normalization norm) {
  const SpectralParams sp = params::to_spectral(p);
  if (norm == Normalization::none) return {eval_kernel_spectral(sp, g), false};
  if (norm == Normalization::bf) {
    if (params::normalizer_bf_is_pole(p)) return {cplx{0.0}, true};
    return {eval_kernel_spectral(sp, g) / params::normalizer_bf(p), false};
  }
  if (params::normalizer_bb_is_pole(p)) return {cplx{0.0}, true};
  return {eval_kernel_spectral(sp, g) / params::normalizer_bb(p), false};
}

/// Jet version: the caller is responsible for checking the pole flag via the
/// scalar overload first; throws if the normalizer is singular.
[[nodiscard]] inline Jet eval_kernel(const PairParams& p, const Mat<Jet>& g,
                                     Normalization norm) {
  const SpectralParams sp = params::to_spectral(p);
  Jet raw = eval_kernel_spectral(sp, g);
  if (norm == Normalization::none) return raw;
  const cplx nf = norm == Normalization::bf ? params::normalizer_bf(p)
                                            : params::normalizer_bb(p);
  const bool pole = norm == Normalization::bf ? params::normalizer_bf_is_pole(p)
                                              : params::normalizer_bb_is_pole(p);
  if (pole) throw std::domain_error("eval_kernel(jet): normalizer pole");
  return raw * (cplx{1.0} / nf);
}

// ---------------------------------------------------------------------------
// Spherical vector on the larger group
// ---------------------------------------------------------------------------

/// Standard spherical vector of the principal series with parameter lambda:
/// value at g is prod_i a_i^{-lambda_i - rho_i} where g = k a n and rho is the
/// half sum of positive roots for the group of rank |lambda|.
[[nodiscard]] inline cplx spherical_vector(const std::vector<cplx>& lambda,
                                           const Mat<double>& g) {
  const int m = g.rows;
  if (static_cast<int>(lambda.size()) != m)
    throw std::invalid_argument("spherical_vector: parameter size mismatch");
  const std::vector<double> rho = params::rho(m);
  const std::vector<double> a = matgroup::iwasawa_a_diag(g);
  cplx out{1.0};
  for (int i = 0; i < m; ++i)
    out *= std::exp(-(lambda[static_cast<std::size_t>(i)] + rho[static_cast<std::size_t>(i)]) *
                    std::log(a[static_cast<std::size_t>(i)]));
  return out;
}

// ---------------------------------------------------------------------------
// Functional-equation constants
// ---------------------------------------------------------------------------

struct ConstantValue {
  cplx value{0.0};
  bool pole = false;  // some gamma factor in the numerator is singular
  bool zero = false;  // some gamma factor in the denominator is singular
};

namespace detail {

/// Ratio of products of normalized gamma factors at the given arguments, all
/// evaluated with pole bookkeeping.
struct LRatio {
  cplx num{1.0};
  cplx den{1.0};
  bool num_pole = false;
  bool den_pole = false;

  void mul_num(cplx s, const RealCharacter& chi) {
    if (scalars::l_factor_is_pole(s, chi)) {
      num_pole = true;
      return;
    }
    num *= scalars::l_factor(s, chi);
  }
  void mul_den(cplx s, const RealCharacter& chi) {
    if (scalars::l_factor_is_pole(s, chi)) {
      den_pole = true;
      return;
    }
    den *= scalars::l_factor(s, chi);
  }

  [[nodiscard]] ConstantValue finish(double sign) const {
    ConstantValue out;
    if (num_pole && !den_pole) {
      out.pole = true;
      return out;
    }
    if (den_pole && !num_pole) {
      out.zero = true;
      out.value = cplx{0.0};
      return out;
    }
    if (num_pole && den_pole) {
      out.pole = true;  // indeterminate ratio; flag for the caller
      return out;
    }
    out.value = sign * num / den;
    return out;
  }
};

[[nodiscard]] inline double parity_power(long exponent) {
  return (exponent % 2 == 0) ? 1.0 : -1.0;
}

}  // namespace detail

/// Constant in the functional equation for the integral transform acting on
/// the larger-group side at simple index i (1 <= i <= n): the transform of
/// the raw kernel, divided by L(0, chi_i chi_{i+1}^{-1}), equals this constant
/// times the raw kernel at the parameter swapped in slots (i, i+1).
[[nodiscard]] inline ConstantValue functional_constant_c(const PairParams& p, int i) {
  const int n = p.n();
  if (i < 1 || i > n) throw std::invalid_argument("functional_constant_c: index");
  const RealCharacter chi_i = p.chi(i);
  const RealCharacter chi_i1 = p.chi(i + 1);
  const RealCharacter psi = p.psi(n + 1 - i);
  const long u = chi_i.eps, v = chi_i1.eps, w = psi.eps;
  const double sign = detail::parity_power((u + v) * (w + 1) + u * v);
  detail::LRatio r;
  r.mul_num(cplx{0.5}, chi_i * psi.inverse());
  r.mul_num(cplx{0.5}, chi_i1.inverse() * psi);
  r.mul_den(cplx{1.0}, chi_i * chi_i1.inverse());
  r.mul_den(cplx{0.5}, chi_i.inverse() * psi);
  r.mul_den(cplx{0.5}, chi_i1 * psi.inverse());
  return r.finish(sign);
}

/// Constant in the functional equation for the transform acting on the
/// smaller-group side at simple index i (1 <= i <= n-1), normalized by
/// L(0, psi_i psi_{i+1}^{-1}).
[[nodiscard]] inline ConstantValue functional_constant_d(const PairParams& p, int i) {
  const int n = p.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("functional_constant_d: index");
  const RealCharacter chi = p.chi(n + 1 - i);
  const RealCharacter psi_i = p.psi(i);
  const RealCharacter psi_i1 = p.psi(i + 1);
  const long u = chi.eps, v = psi_i.eps, w = psi_i1.eps;
  const double sign = detail::parity_power((v + w) * (u + 1) + v * w);
  detail::LRatio r;
  r.mul_num(cplx{0.5}, chi * psi_i.inverse());
  r.mul_num(cplx{0.5}, chi.inverse() * psi_i1);
  r.mul_den(cplx{1.0}, psi_i1 * psi_i.inverse());
  r.mul_den(cplx{0.5}, chi.inverse() * psi_i);
  r.mul_den(cplx{0.5}, chi * psi_i1.inverse());
  return r.finish(sign);
}

/// Constant for the reverse swap, built from its own closed form (not as the
/// reciprocal of the forward constant).  Composing forward and reverse
/// transforms gives the identity, so ctilde(p, i) * c(swap_g(p, i), i) = 1
/// away from poles and zeros; the L-factors cancel pairwise.
[[nodiscard]] inline ConstantValue functional_constant_ctilde(const PairParams& p,
                                                              int i) {
  const int n = p.n();
  if (i < 1 || i > n) throw std::invalid_argument("functional_constant_ctilde: index");
  const RealCharacter chi_i = p.chi(i);
  const RealCharacter chi_i1 = p.chi(i + 1);
  const RealCharacter psi = p.psi(n + 1 - i);
  const long u = chi_i.eps, v = chi_i1.eps, w = psi.eps;
  const double sign = detail::parity_power((u + v) * (w + 1) + u * v);
  detail::LRatio r;
  r.mul_num(cplx{1.0}, chi_i.inverse() * chi_i1);
  r.mul_num(cplx{0.5}, chi_i1.inverse() * psi);
  r.mul_num(cplx{0.5}, chi_i * psi.inverse());
  r.mul_den(cplx{0.5}, chi_i1 * psi.inverse());
  r.mul_den(cplx{0.5}, chi_i.inverse() * psi);
  return r.finish(sign);
}

/// Closed-form constants for the two telescoping chains of simple swaps that
/// move slot i of the larger-group parameter to the last (plus, chain
/// w_i ... w_n) or first (minus, chain w_{i-1} ... w_1) position.  The overall
/// normalization alpha is not pinned down here and is taken to be 1; ratios of
/// these constants across parameters are normalization-independent.
[[nodiscard]] inline ConstantValue functional_constant_b(const PairParams& p, int i,
                                                         bool plus) {
  const int n = p.n();
  if (i < 1 || i > n + 1) throw std::invalid_argument("functional_constant_b: index");
  detail::LRatio r;
  if (plus) {
    for (int j = i; j <= n; ++j) {
      const RealCharacter chi_j1 = p.chi(j + 1);
      const RealCharacter chi_i = p.chi(i);
      const RealCharacter psi = p.psi(n + 1 - j);
      r.mul_num(cplx{1.0}, chi_j1 * chi_i.inverse());
      r.mul_num(cplx{0.5}, chi_j1.inverse() * psi);
      r.mul_num(cplx{0.5}, chi_i * psi.inverse());
      r.mul_den(cplx{0.5}, chi_j1 * psi.inverse());
      r.mul_den(cplx{0.5}, chi_i.inverse() * psi);
    }
  } else {
    for (int j = 1; j <= i - 1; ++j) {
      const RealCharacter chi_i = p.chi(i);
      const RealCharacter chi_j = p.chi(j);
      const RealCharacter psi = p.psi(n + 1 - j);
      r.mul_num(cplx{1.0}, chi_i * chi_j.inverse());
      r.mul_num(cplx{0.5}, chi_i.inverse() * psi);
      r.mul_num(cplx{0.5}, chi_j * psi.inverse());
      r.mul_den(cplx{0.5}, chi_i * psi.inverse());
      r.mul_den(cplx{0.5}, chi_j.inverse() * psi);
    }
  }
  return r.finish(1.0);
}

/// Constant in the functional equation for the *normalized* kernel under one
/// simple swap on the larger-group side: sign / L(1, chi_i chi_{i+1}^{-1}).
[[nodiscard]] inline ConstantValue normalized_constant_t(const PairParams& p, int i) {
  const int n = p.n();
  if (i < 1 || i > n) throw std::invalid_argument("normalized_constant_t: index");
  const long u = p.chi(i).eps, v = p.chi(i + 1).eps, w = p.psi(n + 1 - i).eps;
  const double sign = detail::parity_power((u + v) * (w + 1) + u * v);
  detail::LRatio r;
  r.mul_den(cplx{1.0}, p.chi(i) * p.chi(i + 1).inverse());
  return r.finish(sign);
}

/// Normalized-kernel constant for one simple swap on the smaller-group side:
/// sign / L(1, psi_i^{-1} psi_{i+1}).
[[nodiscard]] inline ConstantValue normalized_constant_s(const PairParams& p, int i) {
  const int n = p.n();
  if (i < 1 || i > n - 1) throw std::invalid_argument("normalized_constant_s: index");
  const long u = p.chi(n + 1 - i).eps, v = p.psi(i).eps, w = p.psi(i + 1).eps;
  const double sign = detail::parity_power((v + w) * (u + 1) + v * w);
  detail::LRatio r;
  r.mul_den(cplx{1.0}, p.psi(i).inverse() * p.psi(i + 1));
  return r.finish(sign);
}

/// L-factor value used to normalize the raw integral transform on the
/// larger-group side before comparing with functional_constant_c.  The
/// operator in the functional equation acts at the *negated* continuous
/// parameter, so the character argument is the reversed difference.
[[nodiscard]] inline cplx transform_normalizer_t(const PairParams& p, int i) {
  return scalars::l_factor(cplx{0.0}, p.chi(i + 1) * p.chi(i).inverse());
}

[[nodiscard]] inline cplx transform_normalizer_s(const PairParams& p, int i) {
  return scalars::l_factor(cplx{0.0}, p.psi(i) * p.psi(i + 1).inverse());
}

}  // namespace glpair::kernel
