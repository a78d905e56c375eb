// Tests for the parameter datum: spectral transform, Weyl moves, shifts,
// normalizers, reducibility walls, integrability strips, and zero sets.

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <vector>

#include "glpair/params.hpp"
#include "glpair/scalars.hpp"
#include "glpair/util.hpp"

namespace gp = glpair::params;
namespace gs = glpair::scalars;
namespace gu = glpair::util;

using cplx = std::complex<double>;

namespace {

gp::PairParams random_params(gu::Rng& rng, int n) {
  gp::PairParams p;
  for (int i = 0; i <= n; ++i) {
    p.lambda.push_back(rng.box(-0.6, 0.6, -1.0, 1.0));
    p.xi.push_back(static_cast<gs::Parity>(rng.uniform_int(0, 1)));
  }
  for (int j = 1; j <= n; ++j) {
    p.nu.push_back(rng.box(-0.6, 0.6, -1.0, 1.0));
    p.eta.push_back(static_cast<gs::Parity>(rng.uniform_int(0, 1)));
  }
  return p;
}

}  // namespace

TEST_CASE("spectral transform matches the hand-worked rank-1 example",
          "[params]") {
  gp::PairParams p;
  p.lambda = {cplx(0.3, 0.1), cplx(-0.2, 0.0)};
  p.nu = {cplx(0.05, -0.02)};
  p.xi = {1, 0};
  p.eta = {1};

  const gp::SpectralParams sp = gp::to_spectral(p);
  REQUIRE(sp.n() == 1);
  REQUIRE(gu::rel_err(sp.s[0], cplx(-0.25, 0.12)) < 1e-15);
  REQUIRE(gu::rel_err(sp.s[1], cplx(0.3, 0.0)) < 1e-15);
  REQUIRE(gu::rel_err(sp.t[0], cplx(-0.25, -0.02)) < 1e-15);
  REQUIRE(sp.delta[0] == 0);
  REQUIRE(sp.delta[1] == 0);
  REQUIRE(sp.eps[0] == 1);
}

TEST_CASE("spectral transform round-trips through its inverse", "[params]") {
  gu::Rng rng(20260814);
  for (int n = 1; n <= 4; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      const gp::PairParams p = random_params(rng, n);
      const gp::PairParams q = gp::from_spectral(gp::to_spectral(p));
      REQUIRE(q.n() == p.n());
      for (int i = 0; i <= n; ++i) {
        CAPTURE(n, trial, i);
        REQUIRE(std::abs(q.lambda[i] - p.lambda[i]) < 1e-13);
        REQUIRE(q.xi[i] == p.xi[i]);
      }
      for (int j = 0; j < n; ++j) {
        CAPTURE(n, trial, j);
        REQUIRE(std::abs(q.nu[j] - p.nu[j]) < 1e-13);
        REQUIRE(q.eta[j] == p.eta[j]);
      }
    }
  }
}

TEST_CASE("slot swaps are involutions acting on single adjacent pairs",
          "[params]") {
  gu::Rng rng(42);
  const int n = 3;
  const gp::PairParams p = random_params(rng, n);

  for (int i = 1; i <= n; ++i) {
    const gp::PairParams q = gp::swap_g(p, i);
    REQUIRE(q.lambda[i - 1] == p.lambda[i]);
    REQUIRE(q.lambda[i] == p.lambda[i - 1]);
    REQUIRE(q.xi[i - 1] == p.xi[i]);
    REQUIRE(q.xi[i] == p.xi[i - 1]);
    // All other slots and the whole small-group datum are untouched.
    for (int k = 0; k <= n; ++k)
      if (k != i - 1 && k != i) REQUIRE(q.lambda[k] == p.lambda[k]);
    REQUIRE(q.nu == p.nu);
    REQUIRE(q.eta == p.eta);

    const gp::PairParams r = gp::swap_g(q, i);
    REQUIRE(r.lambda == p.lambda);
    REQUIRE(r.xi == p.xi);
  }
  for (int i = 1; i <= n - 1; ++i) {
    const gp::PairParams q = gp::swap_h(gp::swap_h(p, i), i);
    REQUIRE(q.nu == p.nu);
    REQUIRE(q.eta == p.eta);
    REQUIRE(q.lambda == p.lambda);
  }
}

TEST_CASE("integer shifts translate exponents and flip parities", "[params]") {
  gu::Rng rng(7);
  const int n = 2;
  const gp::PairParams p = random_params(rng, n);

  const std::vector<int> gs_shift = {2, -1, 3};
  const std::vector<int> hs_shift = {0, 1};
  const gp::PairParams q = gp::shifted(p, gs_shift, hs_shift);

  for (int i = 0; i <= n; ++i) {
    REQUIRE(std::abs(q.lambda[i] - (p.lambda[i] + double(gs_shift[i]))) == 0.0);
    REQUIRE(q.xi[i] == gs::parity_add(p.xi[i], gs::parity_rep(gs_shift[i])));
  }
  for (int j = 0; j < n; ++j) {
    REQUIRE(std::abs(q.nu[j] - (p.nu[j] + double(hs_shift[j]))) == 0.0);
    REQUIRE(q.eta[j] == gs::parity_add(p.eta[j], gs::parity_rep(hs_shift[j])));
  }
}

TEST_CASE("unit and ones vectors have the advertised shapes", "[params]") {
  REQUIRE(gp::unit_vec(4, 0) == std::vector<int>{0, 0, 0, 0});
  REQUIRE(gp::unit_vec(4, 2) == std::vector<int>{0, 1, 0, 0});
  REQUIRE(gp::ones_vec(3) == std::vector<int>{1, 1, 1});
  REQUIRE(gp::ones_vec(3, 2) == std::vector<int>{1, 0, 1});
}

TEST_CASE("normalizer products detect poles exactly where a factor blows up",
          "[params]") {
  gu::Rng rng(11);
  const gp::PairParams p = random_params(rng, 2);

  // Generic complex parameters: finite nonzero normalizers, no pole flag.
  REQUIRE(!gp::normalizer_bf_is_pole(p));
  REQUIRE(!gp::normalizer_bb_is_pole(p));
  REQUIRE(std::abs(gp::normalizer_bf(p)) > 0.0);
  REQUIRE(std::abs(gp::normalizer_bb(p)) > 0.0);

  // Force one cross difference onto a gamma pole of the plain product:
  // lambda_1 - nu_1 + 1/2 = 0 makes the (1,1) factor polar.  Assigning
  // through nu keeps the imaginary parts cancelling exactly.
  gp::PairParams bad = p;
  bad.lambda[0] = bad.nu[0] - 0.5;
  REQUIRE(gp::normalizer_bb_is_pole(bad));
}

TEST_CASE("rank-2 reducibility wall requires an integral real gap of correct parity",
          "[params]") {
  // Walls sit at lambda_1 - lambda_2 in Z with parity matching xi_1 + xi_2;
  // everything off that lattice is irreducible.
  std::vector<gs::Parity> even = {0, 0};
  std::vector<gs::Parity> odd = {0, 1};

  const std::vector<cplx> on_wall_even = {cplx(1.2, 0.0), cplx(-0.8, 0.0)};
  REQUIRE(!gp::is_irreducible(even, on_wall_even));   // gap 2, parity 0
  REQUIRE(gp::is_irreducible(odd, on_wall_even));     // gap 2 but parity 1

  const std::vector<cplx> on_wall_odd = {cplx(1.2, 0.0), cplx(0.2, 0.0)};
  REQUIRE(!gp::is_irreducible(odd, on_wall_odd));     // gap 1, parity 1
  REQUIRE(gp::is_irreducible(even, on_wall_odd));     // gap 1, parity 0

  const std::vector<cplx> off_wall = {cplx(1.2, 0.0), cplx(0.57, 0.0)};
  REQUIRE(gp::is_irreducible(even, off_wall));
  REQUIRE(gp::is_irreducible(odd, off_wall));

  // An imaginary offset larger than the tolerance leaves the wall.
  const std::vector<cplx> im_off = {cplx(1.2, 0.3), cplx(-0.8, 0.0)};
  REQUIRE(gp::is_irreducible(even, im_off));
}

TEST_CASE("local integrability is an open strip condition on real parts",
          "[params]") {
  gp::PairParams p;
  p.xi = {0, 0};
  p.eta = {0};

  // Interlacing exponent real parts inside (-1, 0) give integrability.
  p.lambda = {cplx(0.2, 0.0), cplx(-0.1, 0.0)};
  p.nu = {cplx(0.05, 0.0)};
  REQUIRE(gp::is_locally_integrable(p));

  // Push the first spectral exponent below -1: not integrable.
  gp::PairParams q = p;
  q.lambda[0] = q.nu[0] - 0.6;  // s_1 = lambda_1 - nu_1 - 1/2 = -1.1
  REQUIRE(!gp::is_locally_integrable(q));

  // Imaginary parts never matter.
  gp::PairParams r = q;
  r.lambda[0] += cplx(0.0, 5.0);
  REQUIRE(!gp::is_locally_integrable(r));
  gp::PairParams ok = p;
  ok.lambda[0] += cplx(0.0, 5.0);
  REQUIRE(gp::is_locally_integrable(ok));
}

TEST_CASE("zero-set membership accepts constructed members and rejects offsets",
          "[params]") {
  gu::Rng rng(20260814);
  const int n = 2;

  gp::PairParams p = random_params(rng, n);
  // Build a member of the first discrete family at (i,j,k) = (1,2,1): both
  // cross differences with nu_k must land on the even nonpositive ladder
  // after the parity offset.  Assigning through nu_k keeps the imaginary
  // parts cancelling exactly.
  const int i = 1, j = 2, k = 1;
  p.xi[i - 1] = p.eta[k - 1];                                   // offset 0
  p.lambda[i - 1] = p.nu[k - 1] - 0.5 - 2.0;                    // ladder m=1
  p.xi[j - 1] = gs::parity_add(p.eta[k - 1], gs::parity_rep(1));  // offset 1
  p.lambda[j - 1] = p.nu[k - 1] + 0.5 + 1.0 + 4.0;              // ladder m=2

  REQUIRE(gp::in_zero_set_ln(p, i, j, k));
  REQUIRE(gp::in_any_zero_set(p));

  // Moving both legs off the lattice by an irrational-ish offset leaves
  // every zero set.
  gp::PairParams q = p;
  q.lambda[i - 1] += 0.37;
  q.lambda[j - 1] += 0.41;
  REQUIRE(!gp::in_zero_set_ln(q, i, j, k));
  REQUIRE(!gp::in_any_zero_set(q));
}

TEST_CASE("shift identity descriptors expose polynomial factor and shifted datum",
          "[params]") {
  gu::Rng rng(5);
  const int n = 2;
  const gp::PairParams p = random_params(rng, n);

  for (int i = 1; i <= n; ++i) {
    const gp::ShiftIdentity idD = gp::shift_identity(gp::OpKind::D, i, p);
    REQUIRE(idD.shifted.n() == n);
    // The first family raises exactly the (i+1)-th big slot by one and flips
    // its parity; every other slot and the whole small datum are untouched.
    for (int a = 0; a <= n; ++a) {
      if (a == i) {
        REQUIRE(std::abs(idD.shifted.lambda[a] - (p.lambda[a] + 1.0)) == 0.0);
        REQUIRE(idD.shifted.xi[a] == gs::parity_add(p.xi[a], 1));
      } else {
        REQUIRE(idD.shifted.lambda[a] == p.lambda[a]);
        REQUIRE(idD.shifted.xi[a] == p.xi[a]);
      }
    }
    REQUIRE(idD.shifted.nu == p.nu);
    // The polynomial factor is the product of i cross differences.
    cplx poly = (i % 2 == 1) ? 1.0 : -1.0;
    for (int j = n + 1 - i; j <= n; ++j)
      poly *= p.nu[j - 1] - p.lambda[i] - 0.5;
    REQUIRE(gu::rel_err(idD.poly, poly) < 1e-15);
  }

  // The middle family also raises one small slot; the third family sits in
  // between.  Check the shifted slots only (the polynomial factors are
  // exercised end to end by the operator identities).
  for (int i = 1; i <= n; ++i) {
    const gp::ShiftIdentity idP = gp::shift_identity(gp::OpKind::P, i, p);
    REQUIRE(std::abs(idP.shifted.lambda[i] - (p.lambda[i] + 1.0)) == 0.0);
    REQUIRE(std::abs(idP.shifted.nu[n - i] - (p.nu[n - i] + 1.0)) == 0.0);
  }
  for (int i = 1; i <= n - 1; ++i) {
    const gp::ShiftIdentity idL = gp::shift_identity(gp::OpKind::L, i, p);
    REQUIRE(std::abs(idL.shifted.lambda[i] - (p.lambda[i] + 1.0)) == 0.0);
    REQUIRE(std::abs(idL.shifted.nu[n - i - 1] - (p.nu[n - i - 1] + 1.0)) == 0.0);
  }
}
