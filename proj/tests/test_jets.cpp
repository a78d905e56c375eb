// Tests for multi-direction first-order jets: nilpotent arithmetic, the
// Leibniz rule, powers with parity signs, and jet-valued determinants.

#include <catch2/catch_amalgamated.hpp>

#include <complex>

#include "glpair/jets.hpp"
#include "glpair/matgroup.hpp"
#include "glpair/scalars.hpp"
#include "glpair/util.hpp"

namespace gj = glpair::jets;
namespace gs = glpair::scalars;
namespace mg = glpair::matgroup;
namespace gu = glpair::util;

using gj::Jet;
using cplx = std::complex<double>;

TEST_CASE("single-direction jets square with a doubled slope and no curvature",
          "[jets]") {
  const cplx x{0.7, -0.3};
  const Jet j = Jet::with_direction(1, x, 0);
  const Jet jj = j * j;
  REQUIRE(gu::rel_err(jj.value(), x * x) < 1e-15);
  REQUIRE(gu::rel_err(jj.top(), 2.0 * x) < 1e-15);  // d/du (x+u)^2 at u=0
}

TEST_CASE("products of jets obey the Leibniz rule per direction", "[jets]") {
  const cplx f0{1.2, 0.4}, f1{-0.3, 0.9}, g0{0.5, -0.7}, g1{2.0, 0.1};
  Jet f = Jet::constant(1, f0);
  f.coeff(1) = f1;
  Jet g = Jet::constant(1, g0);
  g.coeff(1) = g1;
  const Jet h = f * g;
  REQUIRE(gu::rel_err(h.value(), f0 * g0) < 1e-15);
  REQUIRE(gu::rel_err(h.top(), f0 * g1 + f1 * g0) < 1e-15);
}

TEST_CASE("top coefficient of a multi-direction product is the mixed partial",
          "[jets]") {
  // h(u1, u2) = (x + u1)(y + u2): the u1 u2 coefficient is 1.
  const cplx x{0.3, 0.0}, y{-1.1, 0.2};
  const Jet f = Jet::with_direction(2, x, 0);
  const Jet g = Jet::with_direction(2, y, 1);
  const Jet h = f * g;
  REQUIRE(gu::rel_err(h.value(), x * y) < 1e-15);
  REQUIRE(gu::rel_err(h.coeff(1), y) < 1e-15);  // d/du1
  REQUIRE(gu::rel_err(h.coeff(2), x) < 1e-15);  // d/du2
  REQUIRE(gu::rel_err(h.top(), cplx{1.0}) < 1e-15);

  // (x + u1 + u2 + u3)^3 has u1 u2 u3 coefficient 3! = 6 for any x.
  Jet s = Jet::constant(3, cplx{0.37, -0.21});
  s.coeff(1) = 1.0;
  s.coeff(2) = 1.0;
  s.coeff(4) = 1.0;
  const Jet cube = s * s * s;
  REQUIRE(gu::rel_err(cube.top(), cplx{6.0}) < 1e-14);
}

TEST_CASE("direction slopes scale derivatives linearly", "[jets]") {
  const cplx x{1.5, 0.0};
  const cplx slope{-0.4, 0.8};
  const Jet a = Jet::with_direction(1, x, 0);
  const Jet b = Jet::with_direction(1, x, 0, slope);
  const Jet fa = a * a * a;
  const Jet fb = b * b * b;
  REQUIRE(gu::rel_err(fb.top(), slope * fa.top()) < 1e-15);
}

TEST_CASE("signed powers of jets differentiate like the scalar function",
          "[jets]") {
  const cplx mu{0.35, -0.6};
  const double h = 1e-6;
  for (const double x0 : {1.7, -2.3, 0.4}) {
    for (const gs::Parity eps : {gs::Parity{0}, gs::Parity{1}}) {
      const Jet j = gj::signed_pow(Jet::with_direction(1, cplx{x0, 0.0}, 0), mu, eps);
      REQUIRE(gu::rel_err(j.value(), gs::signed_pow(x0, mu, eps)) < 1e-14);
      const cplx fd = (gs::signed_pow(x0 + h, mu, eps) -
                       gs::signed_pow(x0 - h, mu, eps)) /
                      (2.0 * h);
      CAPTURE(x0, int(eps));
      REQUIRE(gu::rel_err(j.top(), fd) < 1e-8);
    }
  }
}

TEST_CASE("signed power of a jet with vanishing base is rejected", "[jets]") {
  const Jet z = Jet::with_direction(1, cplx{0.0, 0.0}, 0);
  REQUIRE_THROWS_AS(gj::signed_pow(z, cplx{0.5, 0.0}, gs::Parity{0}),
                    std::domain_error);
}

TEST_CASE("jet-valued determinants differentiate the determinant", "[jets]") {
  // det [[x+u, y], [z, w]] = (x+u) w - y z: value and u-derivative are exact.
  const cplx x{0.9, 0.1}, y{-0.4, 0.0}, z{0.2, -0.5}, w{1.3, 0.7};
  mg::Mat<Jet> m(2, 2);
  m(0, 0) = Jet::with_direction(1, x, 0);
  m(0, 1) = Jet::constant(1, y);
  m(1, 0) = Jet::constant(1, z);
  m(1, 1) = Jet::constant(1, w);
  const Jet d = mg::det(m);
  REQUIRE(gu::rel_err(d.value(), x * w - y * z) < 1e-15);
  REQUIRE(gu::rel_err(d.top(), w) < 1e-15);
}
