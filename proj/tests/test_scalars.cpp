#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <numbers>

#include "glpair/scalars.hpp"
#include "glpair/util.hpp"
#include "oracle_gamma.hpp"

namespace gs = glpair::scalars;
using gs::cplx;
using glpair::util::rel_err;

namespace {
// Frozen oracle outputs (Stirling/Bernoulli reference, see oracle_gamma.hpp).
struct GammaSpot {
  cplx z;
  cplx expected;
};
const GammaSpot kGammaSpots[] = {
    {{0.5, 0.25}, {1.3851135919886646, -0.67318153575969919}},
    {{-0.75, 0.3}, {-2.3118214721176833, 1.4428856982275065}},
    {{3.2, -1.7}, {-0.32885571327896052, -1.4326313582847432}},
    {{-2.3, -4.1}, {-5.7228637223956396e-05, -2.8183685498183927e-05}},
    {{0.1, 8.0}, {-5.627735286992862e-07, 3.7634587834682963e-06}},
};
}  // namespace

TEST_CASE("gamma matches frozen oracle spots to 1e-13", "[scalars]") {
  for (const auto& s : kGammaSpots) {
    CAPTURE(s.z.real(), s.z.imag());
    REQUIRE(rel_err(gs::gamma(s.z), s.expected) < 1e-13);
  }
}

TEST_CASE("gamma matches live oracle on a parameter sweep", "[scalars]") {
  glpair::util::Rng rng(20260814);
  for (int k = 0; k < 200; ++k) {
    const cplx z = rng.box(-4.5, 6.0, -6.0, 6.0);
    if (gs::is_gamma_pole(z, 1e-2)) continue;
    CAPTURE(z.real(), z.imag());
    REQUIRE(rel_err(gs::gamma(z), oracle::gamma(z)) < 1e-12);
  }
}

TEST_CASE("gamma exact values and functional equation", "[scalars]") {
  REQUIRE(rel_err(gs::gamma(1.0), 1.0) < 5e-14);
  REQUIRE(rel_err(gs::gamma(6.0), 120.0) < 5e-14);
  REQUIRE(rel_err(gs::gamma(0.5), std::sqrt(std::numbers::pi)) < 5e-14);
  const cplx z{0.3, 1.1};
  REQUIRE(rel_err(gs::gamma(z + 1.0), z * gs::gamma(z)) < 1e-13);
}

TEST_CASE("gamma pole detection", "[scalars]") {
  REQUIRE(gs::is_gamma_pole({0.0, 0.0}));
  REQUIRE(gs::is_gamma_pole({-3.0 + 1e-12, 0.0}));
  REQUIRE_FALSE(gs::is_gamma_pole({-3.5, 0.0}));
  REQUIRE_FALSE(gs::is_gamma_pole({-3.0, 0.5}));
  REQUIRE_FALSE(gs::is_gamma_pole({0.5, 0.0}));
  REQUIRE_FALSE(gs::is_gamma_pole({-200.0, 0.0}));  // beyond truncation depth
}

TEST_CASE("signed powers and character algebra", "[scalars]") {
  REQUIRE(rel_err(gs::signed_pow(2.0, {0.5, 0.0}, 0), std::sqrt(2.0)) < 1e-15);
  REQUIRE(rel_err(gs::signed_pow(-2.0, {0.5, 0.0}, 0), std::sqrt(2.0)) < 1e-15);
  REQUIRE(rel_err(gs::signed_pow(-2.0, {0.5, 0.0}, 1), -std::sqrt(2.0)) < 1e-15);

  const gs::RealCharacter a{1, {0.3, -0.2}};
  const gs::RealCharacter b{1, {-1.1, 0.7}};
  const auto ab = a * b;
  REQUIRE(ab.eps == 0);
  const double x = -1.7;
  REQUIRE(rel_err(ab(x), a(x) * b(x)) < 1e-14);
  const auto id = a * a.inverse();
  REQUIRE(id.eps == 0);
  REQUIRE(rel_err(id(x), 1.0) < 1e-15);
}

TEST_CASE("l_factor definition and frozen spot", "[scalars]") {
  // Frozen: L(0.5, chi_{1, 0.25i}).
  const gs::RealCharacter chi{1, {0.0, 0.25}};
  REQUIRE(rel_err(gs::l_factor({0.5, 0.0}, chi),
                  cplx{0.48976585371231846, -0.1393101752392808}) < 1e-13);
  // Even character at s=1: pi^{-1/2} Gamma(1/2) = 1 / sqrt(pi) * sqrt(pi)... spelled out:
  const gs::RealCharacter even{0, {0.0, 0.0}};
  REQUIRE(rel_err(gs::l_factor({1.0, 0.0}, even),
                  std::pow(std::numbers::pi, -0.5) * gs::gamma(0.5)) < 1e-14);
  REQUIRE(gs::l_factor_is_pole({0.0, 0.0}, even));
  REQUIRE_FALSE(gs::l_factor_is_pole({1.0, 0.0}, even));
  const gs::RealCharacter odd{1, {0.0, 0.0}};
  REQUIRE(gs::l_factor_is_pole({-1.0, 0.0}, odd));
  REQUIRE_FALSE(gs::l_factor_is_pole({0.0, 0.0}, odd));
}

TEST_CASE("t_factor closed form spots and symmetry", "[scalars]") {
  // t(-2/3, -2/3, 0, 0) = 3 Gamma(1/3)^2 / Gamma(2/3), frozen from the oracle.
  REQUIRE(rel_err(gs::t_factor({-2.0 / 3.0, 0.0}, {-2.0 / 3.0, 0.0}, 0, 0),
                  15.899748752568577) < 1e-12);
  // Frozen mixed-parity complex spot (cross-checked by quadrature in [quad]).
  REQUIRE(rel_err(gs::t_factor({-0.8, 0.2}, {-0.7, -0.1}, 0, 1),
                  cplx{4.4897998389980165, -5.204758381320417}) < 1e-12);

  glpair::util::Rng rng(42);
  for (int k = 0; k < 50; ++k) {
    const cplx alpha = rng.box(-0.95, -0.55, -0.4, 0.4);
    const cplx beta = rng.box(-0.95, -0.55, -0.4, 0.4);
    const auto e = static_cast<gs::Parity>(rng.uniform_int(0, 1));
    const auto x = static_cast<gs::Parity>(rng.uniform_int(0, 1));
    REQUIRE(rel_err(gs::t_factor(alpha, beta, e, x), gs::t_factor(beta, alpha, x, e)) <
            1e-13);
  }
}

TEST_CASE("e_function products and zeros", "[scalars]") {
  using gs::RealCharacter;
  // Two characters: e = 1 / L(1, chi1 chi2^{-1}).
  const RealCharacter c1{0, {0.4, 0.1}};
  const RealCharacter c2{1, {-0.2, -0.3}};
  const auto expected = 1.0 / gs::l_factor(1.0, c1 * c2.inverse());
  REQUIRE(rel_err(gs::e_function({c1, c2}), expected) < 1e-14);
  // Pole of L(1, .) => exact zero: chi1 chi2^{-1} even with mu = -1.
  const RealCharacter d1{0, {0.0, 0.0}};
  const RealCharacter d2{0, {1.0, 0.0}};
  REQUIRE(gs::e_function({d1, d2}) == cplx{0.0, 0.0});
}
