#pragma once
// Determinantal differential operators acting on kernel-type functions of a
// matrix variable.  Each operator is a signed sum over permutations of a
// structured operator matrix ("column-ordered" noncommutative determinant:
// the factor from column 1 is outermost, the factor from the last column acts
// first).  Matrix entries are one of: a scalar, a single polarized derivative
// field, or a minor-multiplication letter (possibly translated by a Weyl
// permutation, and possibly itself a first-order operator coming from a
// nested determinant).  Expansion produces flat "words" which are applied to
// a kernel functional via jets.
//
// Derivative fields:
//   right field E^{i,j} f(g) = d/du f(g (I + u E_{ij}))   (columns)
//   left  field E_{i,j} f(g) = d/du f((I + u E_{ji}) g)   (rows)
// Minor letters evaluate phi(L g R) for permutation matrices L, R, where phi
// is a leading-minor function of the bottom-row family (phi_p) or the
// row-shifted family (psi_q).

#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <utility>
#include <vector>

#include "glpair/jets.hpp"
#include "glpair/matgroup.hpp"
#include "glpair/params.hpp"

namespace glpair::ops {

using cplx = std::complex<double>;
using jets::Jet;
using matgroup::Mat;

// ---------------------------------------------------------------------------
// Permutations and simple-reflection words
// ---------------------------------------------------------------------------

/// Product w_i w_{i±1} ... w_j of simple reflections in GL(m): consecutive
/// indices stepping from i toward j (ascending if i < j, descending if i > j).
[[nodiscard]] inline std::vector<int> perm_word_range(int m, int i, int j) {
  std::vector<int> result = matgroup::perm_identity(m);
  const int step = (i <= j) ? 1 : -1;
  // Rightmost factor (w_j) acts first: compose on the left moving j -> i.
  for (int k = j; k != i - step; k -= step)
    result = matgroup::perm_compose(matgroup::perm_simple(m, k), result);
  return result;
}

// ---------------------------------------------------------------------------
// Letters and words
// ---------------------------------------------------------------------------

enum class MinorFamily { phi, psi };

/// phi(g) = minor(size, L g R) with permutation matrices L, R.
struct MinorLetter {
  MinorFamily family = MinorFamily::phi;
  int size = 1;
  std::vector<int> left_perm;   // permutation whose matrix multiplies on the left
  std::vector<int> right_perm;  // permutation whose matrix multiplies on the right
};

struct Letter {
  enum class Kind { mult, right_field, left_field } kind = Kind::mult;
  MinorLetter minor;  // kind == mult
  int i = 0, j = 0;   // fields (1-based matrix indices)

  [[nodiscard]] static Letter mult(MinorLetter m) {
    Letter l;
    l.kind = Kind::mult;
    l.minor = std::move(m);
    return l;
  }
  [[nodiscard]] static Letter right_field(int i, int j) {
    Letter l;
    l.kind = Kind::right_field;
    l.i = i;
    l.j = j;
    return l;
  }
  [[nodiscard]] static Letter left_field(int i, int j) {
    Letter l;
    l.kind = Kind::left_field;
    l.i = i;
    l.j = j;
  return l;
  }
};

/// One flat word: coeff * (letters[0] applied last, letters.back() first).
struct WordOp {
  cplx coeff{1.0, 0.0};
  std::vector<Letter> letters;
};

using OperatorSum = std::vector<WordOp>;

[[nodiscard]] inline int word_order(const WordOp& w) {
  int n = 0;
  for (const auto& l : w.letters)
    if (l.kind != Letter::Kind::mult) ++n;
  return n;
}

[[nodiscard]] inline int operator_order(const OperatorSum& op) {
  int n = 0;
  for (const auto& w : op)
    if (word_order(w) > n) n = word_order(w);
  return n;
}

// ---------------------------------------------------------------------------
// Operator-matrix entries and noncommutative determinant expansion
// ---------------------------------------------------------------------------

struct Entry {
  enum class Kind { zero, scalar, field, nested } kind = Kind::zero;
  cplx scalar{0.0, 0.0};  // scalar value, or sign carried by a field letter
  Letter field;           // kind == field
  OperatorSum nested;     // kind == nested: already-expanded sum of words

  [[nodiscard]] static Entry make_zero() { return {}; }
  [[nodiscard]] static Entry make_scalar(cplx v) {
    Entry e;
    e.kind = Kind::scalar;
    e.scalar = v;
    return e;
  }
  [[nodiscard]] static Entry make_field(Letter l, double sign = 1.0) {
    Entry e;
    e.kind = Kind::field;
    e.scalar = sign;
    e.field = std::move(l);
    return e;
  }
  [[nodiscard]] static Entry make_nested(OperatorSum s) {
    Entry e;
    e.kind = Kind::nested;
    e.nested = std::move(s);
    return e;
  }
};

namespace detail {

inline void expand_rec(const std::vector<std::vector<Entry>>& mat, int col,
                       std::vector<int>& used_row, std::vector<bool>& taken,
                       OperatorSum& out, cplx prefactor) {
  const int m = static_cast<int>(mat.size());
  if (col == m) {
    // Permutation sign: count inversions of the row sequence.
    int inv = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b)
        if (used_row[a] > used_row[b]) ++inv;
    const double sgn = (inv % 2 == 0) ? 1.0 : -1.0;

    // Assemble words column by column (column 0 outermost).
    OperatorSum words;
    words.push_back(WordOp{prefactor * sgn, {}});
    for (int c = 0; c < m; ++c) {
      const Entry& e = mat[used_row[c]][c];
      switch (e.kind) {
        case Entry::Kind::scalar:
          for (auto& w : words) w.coeff *= e.scalar;
          break;
        case Entry::Kind::field:
          for (auto& w : words) {
            w.coeff *= e.scalar;
            w.letters.push_back(e.field);
          }
          break;
        case Entry::Kind::nested: {
          OperatorSum next;
          next.reserve(words.size() * e.nested.size());
          for (const auto& w : words)
            for (const auto& inner : e.nested) {
              WordOp nw = w;
              nw.coeff *= inner.coeff;
              nw.letters.insert(nw.letters.end(), inner.letters.begin(),
                                inner.letters.end());
              next.push_back(std::move(nw));
            }
          words = std::move(next);
          break;
        }
        case Entry::Kind::zero:
          return;  // unreachable: pruned below
      }
    }
    out.insert(out.end(), words.begin(), words.end());
    return;
  }
  for (int r = 0; r < m; ++r) {
    if (taken[r] || mat[r][col].kind == Entry::Kind::zero) continue;
    taken[r] = true;
    used_row.push_back(r);
    expand_rec(mat, col + 1, used_row, taken, out, prefactor);
    used_row.pop_back();
    taken[r] = false;
  }
}

}  // namespace detail

/// Expand det(mat) = sum_sigma sgn(sigma) a_{sigma(1),1} ... a_{sigma(m),m}
/// into flat words, times a scalar prefactor.
[[nodiscard]] inline OperatorSum expand_ncdet(
    const std::vector<std::vector<Entry>>& mat, cplx prefactor = cplx{1.0}) {
  OperatorSum out;
  std::vector<int> used_row;
  std::vector<bool> taken(mat.size(), false);
  detail::expand_rec(mat, 0, used_row, taken, out, prefactor);
  return out;
}

// ---------------------------------------------------------------------------
// Builders for the five operator families on GL(n+1) x GL(n)
//   scalars: lam(i,j) = lambda_i - lambda_j - 1, nuc(i,j) = nu_i - nu_j - 1
// ---------------------------------------------------------------------------

namespace detail {

[[nodiscard]] inline cplx lam_pair(const std::vector<cplx>& lambda, int i, int j) {
  return lambda[static_cast<std::size_t>(i - 1)] -
         lambda[static_cast<std::size_t>(j - 1)] - 1.0;
}

/// Minor letter for the bottom-row family at size `size` in GL(m), with an
/// optional right translation r(w): phi(g) = Phi_size(g * W).
[[nodiscard]] inline MinorLetter phi_letter(int m, int size,
                                            std::vector<int> right_perm) {
  MinorLetter l;
  l.family = MinorFamily::phi;
  l.size = size;
  l.left_perm = matgroup::perm_identity(m);
  l.right_perm = std::move(right_perm);
  return l;
}

[[nodiscard]] inline MinorLetter psi_letter([[maybe_unused]] int m, int size,
                                            std::vector<int> left_perm,
                                            std::vector<int> right_perm) {
  MinorLetter l;
  l.family = MinorFamily::psi;
  l.size = size;
  l.left_perm = std::move(left_perm);
  l.right_perm = std::move(right_perm);
  return l;
}

}  // namespace detail

/// First family: order-i operator on GL(n+1), matrix size (i+1) x (i+1),
/// prefactor (-1)^{i+1}.  Column 1 row r: r(w_{r-1,1}) Phi_1; superdiagonal
/// (r,r+1): lam(r, i+1); below-diagonal (r,c): right field E^{r,c-1}.
[[nodiscard]] inline OperatorSum build_op_d(int n, int i,
                                            const std::vector<cplx>& lambda) {
  if (i < 1 || i > n) throw std::invalid_argument("build_op_d: index range");
  const int m = i + 1;
  const int mg = n + 1;
  std::vector<std::vector<Entry>> mat(
      static_cast<std::size_t>(m),
      std::vector<Entry>(static_cast<std::size_t>(m), Entry::make_zero()));
  for (int r = 1; r <= m; ++r) {
    // r(w_{r-1,1}) Phi_1; for r = 1 the word is empty (identity).
    std::vector<int> w = r >= 2 ? perm_word_range(mg, r - 1, 1)
                                : matgroup::perm_identity(mg);
    mat[r - 1][0] =
        Entry::make_field(Letter::mult(detail::phi_letter(mg, 1, std::move(w))));
  }
  for (int r = 1; r < m; ++r)
    mat[r - 1][static_cast<std::size_t>(r)] =
        Entry::make_scalar(detail::lam_pair(lambda, r, i + 1));
  for (int r = 2; r <= m; ++r)
    for (int c = 2; c <= r; ++c)
      mat[r - 1][c - 1] = Entry::make_field(Letter::right_field(r, c - 1));
  const double pref = ((i % 2 == 0) ? -1.0 : 1.0) *  // (-1)^{i+1}
                      params::op_sign(params::OpKind::D, n, i);
  return expand_ncdet(mat, pref);
}

/// Companion family on the GL(n) factor: for 1 <= i <= n-1, matrix size
/// (n-i+1) x (n-i+1), prefactor (-1)^{n-i}.  Column 1 row r:
/// l(w_{n+1-r,n-1}) Psi_1; superdiagonal (r,r+1): nuc(n+1-r, i); below-diagonal
/// (r,c): left field E_{n+1-r, n+2-c}.  For i = n the operator is just Psi_1.
/// `outer_right` (a permutation of GL(n+1)) optionally right-translates every
/// minor letter: used when this operator appears inside a larger determinant
/// under r(w).
[[nodiscard]] inline OperatorSum build_op_c(int n, int i,
                                            const std::vector<cplx>& nu,
                                            const std::vector<int>* outer_right = nullptr) {
  if (i < 1 || i > n) throw std::invalid_argument("build_op_c: index range");
  const int mg = n + 1;
  auto right_of = [&](void) -> std::vector<int> {
    return outer_right ? *outer_right : matgroup::perm_identity(mg);
  };
  if (i == n) {
    OperatorSum out;
    out.push_back(WordOp{cplx{1.0}, {Letter::mult(detail::psi_letter(
                                        mg, 1, matgroup::perm_identity(mg),
                                        right_of()))}});
    return out;
  }
  const int m = n - i + 1;
  std::vector<std::vector<Entry>> mat(
      static_cast<std::size_t>(m),
      std::vector<Entry>(static_cast<std::size_t>(m), Entry::make_zero()));
  for (int r = 1; r <= m; ++r) {
    // l(w) phi(g) = phi(w^{-1} g): left perm is the inverse of the word.
    std::vector<int> w = r >= 2 ? perm_word_range(mg, n + 1 - r, n - 1)
                                : matgroup::perm_identity(mg);
    mat[r - 1][0] = Entry::make_field(Letter::mult(detail::psi_letter(
        mg, 1, matgroup::perm_inverse(w), right_of())));
  }
  auto nuc = [&](int a, int b) {
    return nu[static_cast<std::size_t>(a - 1)] -
           nu[static_cast<std::size_t>(b - 1)] - 1.0;
  };
  for (int r = 1; r < m; ++r)
    mat[r - 1][static_cast<std::size_t>(r)] = Entry::make_scalar(nuc(n + 1 - r, i));
  for (int r = 2; r <= m; ++r)
    for (int c = 2; c <= r; ++c)
      mat[r - 1][c - 1] =
          Entry::make_field(Letter::left_field(n + 1 - r, n + 2 - c));
  const double pref = ((n - i) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n-i}
  return expand_ncdet(mat, pref);
}

namespace detail {

/// Shared shell for the two mixed families: the first-family matrix with the
/// minor letters in column 1 replaced by r(w_{r-1,1}) applied to a companion
/// operator of the given index.
[[nodiscard]] inline OperatorSum build_mixed(int n, int i, int companion_index,
                                             const std::vector<cplx>& lambda,
                                             const std::vector<cplx>& nu,
                                             double family_sign) {
  const int m = i + 1;
  const int mg = n + 1;
  std::vector<std::vector<Entry>> mat(
      static_cast<std::size_t>(m),
      std::vector<Entry>(static_cast<std::size_t>(m), Entry::make_zero()));
  for (int r = 1; r <= m; ++r) {
    std::vector<int> w = r >= 2 ? perm_word_range(mg, r - 1, 1)
                                : matgroup::perm_identity(mg);
    mat[r - 1][0] =
        Entry::make_nested(build_op_c(n, companion_index, nu, &w));
  }
  for (int r = 1; r < m; ++r)
    mat[r - 1][static_cast<std::size_t>(r)] =
        Entry::make_scalar(lam_pair(lambda, r, i + 1));
  for (int r = 2; r <= m; ++r)
    for (int c = 2; c <= r; ++c)
      mat[r - 1][c - 1] = Entry::make_field(Letter::right_field(r, c - 1));
  const double pref = ((i % 2 == 0) ? -1.0 : 1.0) * family_sign;  // (-1)^{i+1}
  return expand_ncdet(mat, pref);
}

}  // namespace detail

/// Mixed family of order 2i (1 <= i <= n-1): first-family shell around the
/// order-(i) companion operator with index n-i.
[[nodiscard]] inline OperatorSum build_op_l(int n, int i,
                                            const std::vector<cplx>& lambda,
                                            const std::vector<cplx>& nu) {
  if (i < 1 || i > n - 1) throw std::invalid_argument("build_op_l: index range");
  return detail::build_mixed(n, i, n - i, lambda, nu,
                             params::op_sign(params::OpKind::L, n, i));
}

/// Mixed family of order 2i-1 (1 <= i <= n): first-family shell around the
/// companion operator with index n+1-i.
[[nodiscard]] inline OperatorSum build_op_p(int n, int i,
                                            const std::vector<cplx>& lambda,
                                            const std::vector<cplx>& nu) {
  if (i < 1 || i > n) throw std::invalid_argument("build_op_p: index range");
  return detail::build_mixed(n, i, n + 1 - i, lambda, nu,
                             params::op_sign(params::OpKind::P, n, i));
}

/// Descending family of order n+1-i (1 <= i <= n): matrix size
/// (n+2-i) x (n+2-i), prefactor (-1)^{n+1-i}.  Column 1 row 1: Psi_n; row
/// r >= 2: r(w_{n+2-r,n}) Psi_n.  Superdiagonal (r,r+1): lam(i, n+2-r).
/// Below-diagonal (r,c), 2 <= c <= r: sign-twisted right field
/// (-1)^{(n+3-c)+(n+2-r)+1} E^{n+3-c, n+2-r}.
[[nodiscard]] inline OperatorSum build_op_f(int n, int i,
                                            const std::vector<cplx>& lambda) {
  if (i < 1 || i > n) throw std::invalid_argument("build_op_f: index range");
  const int m = n + 2 - i;
  const int mg = n + 1;
  std::vector<std::vector<Entry>> mat(
      static_cast<std::size_t>(m),
      std::vector<Entry>(static_cast<std::size_t>(m), Entry::make_zero()));
  for (int r = 1; r <= m; ++r) {
    std::vector<int> w = r >= 2 ? perm_word_range(mg, n + 2 - r, n)
                                : matgroup::perm_identity(mg);
    mat[r - 1][0] = Entry::make_field(Letter::mult(detail::psi_letter(
        mg, n, matgroup::perm_identity(mg), std::move(w))));
  }
  for (int r = 1; r < m; ++r)
    mat[r - 1][static_cast<std::size_t>(r)] =
        Entry::make_scalar(detail::lam_pair(lambda, i, n + 2 - r));
  for (int r = 2; r <= m; ++r)
    for (int c = 2; c <= r; ++c) {
      const int a = n + 3 - c, b = n + 2 - r;
      const double sign = ((a + b + 1) % 2 == 0) ? 1.0 : -1.0;
      mat[r - 1][c - 1] = Entry::make_field(Letter::right_field(a, b), sign);
    }
  const double pref = ((n + 1 - i) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n+1-i}
  return expand_ncdet(mat, pref);
}

// ---------------------------------------------------------------------------
// Word application via jets
// ---------------------------------------------------------------------------

namespace detail {

[[nodiscard]] inline Mat<Jet> jet_identity(int m, int dirs) {
  Mat<Jet> out(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      out(a, b) = Jet::constant(dirs, a == b ? 1.0 : 0.0);
  return out;
}

[[nodiscard]] inline Mat<Jet> lift(const Mat<double>& g, int dirs) {
  Mat<Jet> out(g.rows, g.cols);
  for (int a = 0; a < g.rows; ++a)
    for (int b = 0; b < g.cols; ++b)
      out(a, b) = Jet::constant(dirs, g(a, b));
  return out;
}

[[nodiscard]] inline Mat<Jet> apply_perms(const MinorLetter& l,
                                          const Mat<Jet>& g, int dirs) {
  const int m = g.rows;
  Mat<Jet> lm(m, m), rm(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      lm(a, b) = Jet::constant(dirs, 0.0);
      rm(a, b) = Jet::constant(dirs, 0.0);
    }
  // perm_matrix convention: P e_j = e_{perm[j-1]}.
  for (int j = 1; j <= m; ++j) {
    lm(l.left_perm[static_cast<std::size_t>(j - 1)] - 1, j - 1) =
        Jet::constant(dirs, 1.0);
    rm(l.right_perm[static_cast<std::size_t>(j - 1)] - 1, j - 1) =
        Jet::constant(dirs, 1.0);
  }
  return lm * (g * rm);
}

[[nodiscard]] inline Jet eval_minor(const MinorLetter& l, const Mat<Jet>& g,
                                    int dirs) {
  const Mat<Jet> h = apply_perms(l, g, dirs);
  const int m = h.rows;
  if (l.family == MinorFamily::phi) {
    Mat<Jet> sub(l.size, l.size);
    for (int a = 1; a <= l.size; ++a)
      for (int b = 1; b <= l.size; ++b)
        sub(a - 1, b - 1) = h(m - a, b - 1);
    return matgroup::det_laplace(sub);
  }
  if (l.size == 0) return Jet::constant(dirs, 1.0);
  Mat<Jet> sub(l.size, l.size);
  for (int a = 1; a <= l.size; ++a)
    for (int b = 1; b <= l.size; ++b)
      sub(a - 1, b - 1) = h(m - 1 - a, b - 1);
  return matgroup::det_laplace(sub);
}

}  // namespace detail

/// Apply one word to a functional `kernel` (callable on Mat<Jet>, returning
/// Jet) at the base point g0.  Letters are processed left to right; each
/// derivative letter gets its own nilpotent direction; each minor letter is
/// evaluated at the partially perturbed point built from the letters that
/// precede it (i.e. that act after it on functions but stand to its left in
/// the word); the kernel sees the fully perturbed point.  The result is the
/// coefficient of the product of all directions.
template <class KernelFn>
[[nodiscard]] cplx apply_word(const WordOp& word, const Mat<double>& g0,
                              KernelFn&& kernel) {
  const int dirs = word_order(word);
  const int m = g0.rows;
  Mat<Jet> lcum = detail::jet_identity(m, dirs);
  Mat<Jet> rcum = detail::jet_identity(m, dirs);
  Mat<Jet> base = detail::lift(g0, dirs);

  Jet mult_accum = Jet::constant(dirs, 1.0);
  int next_dir = 0;
  for (const auto& letter : word.letters) {
    switch (letter.kind) {
      case Letter::Kind::right_field: {
        Mat<Jet> bump = detail::jet_identity(m, dirs);
        bump(letter.i - 1, letter.j - 1) =
            Jet::with_direction(dirs, 0.0, next_dir);
        ++next_dir;
        rcum = rcum * bump;
        break;
      }
      case Letter::Kind::left_field: {
        Mat<Jet> bump = detail::jet_identity(m, dirs);
        bump(letter.j - 1, letter.i - 1) =
            Jet::with_direction(dirs, 0.0, next_dir);
        ++next_dir;
        lcum = bump * lcum;
        break;
      }
      case Letter::Kind::mult: {
        const Mat<Jet> here = lcum * (base * rcum);
        mult_accum = mult_accum * detail::eval_minor(letter.minor, here, dirs);
        break;
      }
    }
  }
  const Mat<Jet> full = lcum * (base * rcum);
  const Jet value = mult_accum * kernel(full);
  return word.coeff * value.top();
}

template <class KernelFn>
[[nodiscard]] cplx apply_operator(const OperatorSum& op, const Mat<double>& g0,
                                  KernelFn&& kernel) {
  cplx acc{0.0};
  for (const auto& w : op) acc += apply_word(w, g0, kernel);
  return acc;
}

}  // namespace glpair::ops
