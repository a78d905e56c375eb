#pragma once
// Matrix layer: small dense matrices over an arbitrary ring scalar, the
// group elements used throughout (permutation representatives, one-parameter
// lower unipotents, the reversal element), the two families of corner minors
// the kernel is built from, determinant routines per scalar type, and
// sampling of matrices with all corner minors nonzero.

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "glpair/util.hpp"

namespace glpair::matgroup {

using cplx = std::complex<double>;

template <class S>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, S{}) {}

  [[nodiscard]] S& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  [[nodiscard]] const S& operator()(int r, int c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }

  [[nodiscard]] static Mat identity(int m) {
    Mat out(m, m);
    for (int i = 0; i < m; ++i) out(i, i) = S{1};
    return out;
  }

  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols != y.rows) throw std::invalid_argument("Mat product: shape mismatch");
    Mat out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        const S& f = x(i, k);
        for (int j = 0; j < y.cols; ++j) out(i, j) += f * y(k, j);
      }
    return out;
  }
};

template <class S, class T>
[[nodiscard]] Mat<T> cast_mat(const Mat<S>& m, T (*conv)(const S&)) {
  Mat<T> out(m.rows, m.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) out.a[k] = conv(m.a[k]);
  return out;
}

[[nodiscard]] inline Mat<double> to_double(const Mat<long long>& m) {
  Mat<double> out(m.rows, m.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k) out.a[k] = static_cast<double>(m.a[k]);
  return out;
}

// ---------------------------------------------------------------------------
// Group elements (all returned as m x m matrices over S)
// ---------------------------------------------------------------------------

/// Permutation matrix P with P e_j = e_{perm[j-1]} (perm is 1-based images).
template <class S>
[[nodiscard]] Mat<S> perm_matrix(const std::vector<int>& perm) {
  const int m = static_cast<int>(perm.size());
  Mat<S> out(m, m);
  for (int j = 1; j <= m; ++j) out(perm[j - 1] - 1, j - 1) = S{1};
  return out;
}

/// Composition matching matrix products of permutation matrices: (v o w)(j) = v(w(j)).
[[nodiscard]] inline std::vector<int> perm_compose(const std::vector<int>& v,
                                                   const std::vector<int>& w) {
  std::vector<int> out(w.size());
  for (std::size_t j = 0; j < w.size(); ++j) out[j] = v[w[j] - 1];
  return out;
}

[[nodiscard]] inline std::vector<int> perm_identity(int m) {
  std::vector<int> out(m);
  for (int j = 1; j <= m; ++j) out[j - 1] = j;
  return out;
}

[[nodiscard]] inline std::vector<int> perm_inverse(const std::vector<int>& v) {
  std::vector<int> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[v[j] - 1] = static_cast<int>(j) + 1;
  return out;
}

/// Simple transposition (i, i+1) as a permutation of {1..m}, 1 <= i <= m-1.
[[nodiscard]] inline std::vector<int> perm_simple(int m, int i) {
  auto out = perm_identity(m);
  std::swap(out[i - 1], out[i]);
  return out;
}

template <class S>
[[nodiscard]] Mat<S> weyl_simple(int m, int i) {
  return perm_matrix<S>(perm_simple(m, i));
}

/// Reversal permutation matrix (antidiagonal ones).
template <class S>
[[nodiscard]] Mat<S> weyl_longest(int m) {
  Mat<S> out(m, m);
  for (int j = 0; j < m; ++j) out(m - 1 - j, j) = S{1};
  return out;
}

/// One-parameter lower unipotent I + x E_{i+1,i} (1 <= i <= m-1).
template <class S>
[[nodiscard]] Mat<S> nbar(int m, int i, const S& x) {
  Mat<S> out = Mat<S>::identity(m);
  out(i, i - 1) = x;
  return out;
}

/// Base point with ones on the antidiagonal and on the diagonal just above
/// it: all corner minors of both families equal one here.
template <class S>
[[nodiscard]] Mat<S> base_point(int m) {
  Mat<S> out(m, m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (i + j == m || i + j == m + 1) out(i - 1, j - 1) = S{1};
  return out;
}

// ---------------------------------------------------------------------------
// Determinants
// ---------------------------------------------------------------------------

/// Laplace expansion along the first column; for generic ring scalars
/// (used for jet-valued matrices, whose dimension is at most 6 here).
template <class S>
[[nodiscard]] S det_laplace(const Mat<S>& m) {
  const int d = m.rows;
  if (d != m.cols) throw std::invalid_argument("det: matrix not square");
  if (d == 1) return m(0, 0);
  if (d == 2) return m(0, 0) * m(1, 1) - m(1, 0) * m(0, 1);
  S out{};
  for (int r = 0; r < d; ++r) {
    Mat<S> sub(d - 1, d - 1);
    for (int i = 0, si = 0; i < d; ++i) {
      if (i == r) continue;
      for (int j = 1; j < d; ++j) sub(si, j - 1) = m(i, j);
      ++si;
    }
    const S term = m(r, 0) * det_laplace(sub);
    if (r % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace detail {
template <class F>
[[nodiscard]] F det_lu(Mat<F> m) {
  const int d = m.rows;
  F out{1};
  for (int k = 0; k < d; ++k) {
    int pivot = k;
    double best = std::abs(m(k, k));
    for (int r = k + 1; r < d; ++r) {
      const double cand = std::abs(m(r, k));
      if (cand > best) {
        best = cand;
        pivot = r;
      }
    }
    if (best == 0.0) return F{0};
    if (pivot != k) {
      for (int c = k; c < d; ++c) std::swap(m(k, c), m(pivot, c));
      out = -out;
    }
    out *= m(k, k);
    for (int r = k + 1; r < d; ++r) {
      const F f = m(r, k) / m(k, k);
      for (int c = k + 1; c < d; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return out;
}
}  // namespace detail

[[nodiscard]] inline double det(const Mat<double>& m) { return detail::det_lu(m); }
[[nodiscard]] inline cplx det(const Mat<cplx>& m) { return detail::det_lu(m); }

/// Bareiss fraction-free elimination: exact integer determinant (beware of
/// overflow for large entries; fine for the small test matrices used here).
[[nodiscard]] inline long long det(const Mat<long long>& m) {
  Mat<long long> w = m;
  const int d = w.rows;
  long long prev = 1;
  long long sign = 1;
  for (int k = 0; k < d - 1; ++k) {
    if (w(k, k) == 0) {
      int pivot = -1;
      for (int r = k + 1; r < d; ++r)
        if (w(r, k) != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      for (int c = k; c < d; ++c) std::swap(w(k, c), w(pivot, c));
      sign = -sign;
    }
    for (int r = k + 1; r < d; ++r)
      for (int c = k + 1; c < d; ++c)
        w(r, c) = (w(r, c) * w(k, k) - w(r, k) * w(k, c)) / prev;
    prev = w(k, k);
  }
  return sign * w(d - 1, d - 1);
}

template <class S>
[[nodiscard]] S det(const Mat<S>& m) {
  return det_laplace(m);
}

// ---------------------------------------------------------------------------
// Corner minors
// ---------------------------------------------------------------------------

/// First minor family at size p (1 <= p <= m): determinant of the block made
/// of the bottom p rows in reversed order against the first p columns, i.e.
/// entry (a,b) = g_{m+1-a, b} in 1-based reading.
template <class S>
[[nodiscard]] S minor_phi(const Mat<S>& g, int p) {
  const int m = g.rows;
  if (p < 1 || p > m) throw std::invalid_argument("minor_phi: bad size");
  Mat<S> sub(p, p);
  for (int a = 1; a <= p; ++a)
    for (int b = 1; b <= p; ++b) sub(a - 1, b - 1) = g(m - a, b - 1);
  return det(sub);
}

/// Second minor family at size q (0 <= q <= m-1): rows m-1, ..., m-q in
/// reversed order against the first q columns; empty minor is one.
template <class S>
[[nodiscard]] S minor_psi(const Mat<S>& g, int q) {
  const int m = g.rows;
  if (q == 0) return S{1};
  if (q < 0 || q > m - 1) throw std::invalid_argument("minor_psi: bad size");
  Mat<S> sub(q, q);
  for (int a = 1; a <= q; ++a)
    for (int b = 1; b <= q; ++b) sub(a - 1, b - 1) = g(m - 1 - a, b - 1);
  return det(sub);
}

// ---------------------------------------------------------------------------
// Regularity and sampling
// ---------------------------------------------------------------------------

/// All corner minors of both families are nonzero (exact test).
[[nodiscard]] inline bool is_regular(const Mat<long long>& g) {
  const int m = g.rows;
  for (int p = 1; p <= m; ++p)
    if (minor_phi(g, p) == 0) return false;
  for (int q = 1; q <= m - 1; ++q)
    if (minor_psi(g, q) == 0) return false;
  return true;
}

/// All corner minors exceed `threshold` in absolute value.
[[nodiscard]] inline bool is_regular(const Mat<double>& g, double threshold = 1e-3) {
  const int m = g.rows;
  for (int p = 1; p <= m; ++p)
    if (std::abs(minor_phi(g, p)) <= threshold) return false;
  for (int q = 1; q <= m - 1; ++q)
    if (std::abs(minor_psi(g, q)) <= threshold) return false;
  return true;
}

/// Random integer matrix with entries in [lo, hi] and all corner minors
/// nonzero; throws after max_tries failures.
[[nodiscard]] inline Mat<long long> sample_regular_int_matrix(util::Rng& rng, int m,
                                                              int lo = -9, int hi = 9,
                                                              int max_tries = 1000) {
  for (int t = 0; t < max_tries; ++t) {
    Mat<long long> g(m, m);
    for (auto& e : g.a) e = rng.uniform_int(lo, hi);
    if (is_regular(g)) return g;
  }
  throw std::runtime_error("sample_regular_int_matrix: no regular matrix found");
}

/// Random real matrix with entries in [-2, 2] and all corner minors bounded
/// away from zero; throws after max_tries failures.
[[nodiscard]] inline Mat<double> sample_regular_matrix(util::Rng& rng, int m,
                                                       double threshold = 5e-2,
                                                       int max_tries = 1000) {
  for (int t = 0; t < max_tries; ++t) {
    Mat<double> g(m, m);
    for (auto& e : g.a) e = rng.uniform(-2.0, 2.0);
    if (is_regular(g, threshold)) return g;
  }
  throw std::runtime_error("sample_regular_matrix: no regular matrix found");
}

/// Diagonal of the triangular factor in the orthogonal decomposition
/// g = k a n with k orthogonal, a positive diagonal, n upper unipotent;
/// computed by Gram-Schmidt on columns.  Requires g invertible.
[[nodiscard]] inline std::vector<double> iwasawa_a_diag(const Mat<double>& g) {
  const int m = g.rows;
  std::vector<std::vector<double>> q(m, std::vector<double>(m));
  std::vector<double> diag(m);
  for (int j = 0; j < m; ++j) {
    std::vector<double> v(m);
    for (int r = 0; r < m; ++r) v[r] = g(r, j);
    for (int k = 0; k < j; ++k) {
      double proj = 0;
      for (int r = 0; r < m; ++r) proj += q[k][r] * v[r];
      for (int r = 0; r < m; ++r) v[r] -= proj * q[k][r];
    }
    double norm = 0;
    for (int r = 0; r < m; ++r) norm += v[r] * v[r];
    norm = std::sqrt(norm);
    if (norm == 0.0) throw std::invalid_argument("iwasawa_a_diag: singular matrix");
    diag[j] = norm;
    q[j] = v;
    for (int r = 0; r < m; ++r) q[j][r] /= norm;
  }
  return diag;
}

}  // namespace glpair::matgroup
