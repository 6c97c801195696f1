#include "doctest.h"
#include "specact/counterterm.hpp"
#include "specact/errors.hpp"
#include "specact/spectral.hpp"

using namespace specact;

namespace {

InvariantPolynomial on(Basis b, const Rat& c, int pi_power = -2) {
  return InvariantPolynomial::single(b, PiScaled(c, pi_power));
}

}  // namespace

TEST_CASE("heat coefficients of the squared Dirac operator") {
  const auto h = spectral_heat_coeffs();
  CHECK(h.a4 == on(Basis::B1, Rat(-1, 24)));
  CHECK(h.a6_eliminated ==
        on(Basis::B2, Rat(1, 720)) + on(Basis::B4, Rat(-11, 1440)) + on(Basis::B5, Rat(1, 30)));
  CHECK(h.a6 == on(Basis::B2, Rat(2, 15 * 8)) + on(Basis::B5, Rat(23, 45 * 8)));
  CHECK(reduce(h.a6_raw) == h.a6);
}

TEST_CASE("one-loop divergence against the closed form") {
  const PiPoly closed = hdym_pole_closed();
  const auto symbolic = hdym_counterterm();
  CHECK(symbolic.pole_coefficient == closed);
  for (const Rat& g : {Rat(0), Rat(1), Rat(23, 4), Rat(-3), Rat(7, 9)}) {
    const auto r = hdym_counterterm(g);
    const PiPoly expected(closed.coeff.substitute(Var::Gamma, g), closed.pi_power);
    CHECK(r.pole_coefficient == expected);
    CHECK(r.divergence.coefficient(Basis::Vol).is_zero());
    CHECK(r.gauge_part + r.ghost_part == r.pole_coefficient);
  }
  CHECK(hdym_counterterm(Rat(0)).pole_coefficient == to_pipoly(PiScaled(Rat(11, 12 * 16), -2)));
  CHECK(hdym_counterterm(Rat(23, 4)).pole_coefficient == to_pipoly(PiScaled(Rat(5603, 768 * 16), -2)));
  // gauge operator alone at gamma = 0
  CHECK(hdym_counterterm(Rat(0)).gauge_a4.coefficient(Basis::B1) == to_pipoly(PiScaled(Rat(-40, 24 * 16), -2)));
  CHECK(hdym_counterterm(Rat(0)).ghost_part == to_pipoly(PiScaled(Rat(1, 192), -2)));
}

TEST_CASE("theory read off the truncated spectral action") {
  const auto t = theory_k2(Rat(1), Rat(1));
  CHECK(t.gamma_eff == Rat(23, 4));
  CHECK(t.lambda2_eff == Rat(-5));
  CHECK_THROWS_AS(theory_k2(Rat(1), Rat(0)), DomainError);
  CHECK_THROWS_AS(k2_pipeline(Rat(1), Rat(0)), DomainError);
  CHECK_THROWS_AS(theory_k2(Rat(1), Rat(1), Rat(-1)), DomainError);
}

TEST_CASE("pole of the k = 2 pipeline is scale invariant") {
  const PiPoly expected = to_pipoly(PiScaled(Rat(5603, 768 * 16), -2));
  for (auto [f0, fm2, lambda2] : {std::tuple{Rat(1), Rat(1), Rat(1)}, std::tuple{Rat(2), Rat(2), Rat(1)},
                                  std::tuple{Rat(1), Rat(1), Rat(9)}, std::tuple{Rat(3, 7), Rat(5), Rat(1, 4)}}) {
    const auto r = k2_pipeline(f0, fm2, lambda2);
    CHECK(r.pole_coefficient == expected);
    REQUIRE(r.theory.has_value());
    CHECK(r.theory->gamma_eff == Rat(23, 4));
  }
}

TEST_CASE("running of f0") {
  const PiScaled zero;
  CHECK(f0_shift(zero, zero, 2).str() == "f0");
  CHECK(f0_shift_symbolic() == "f0 + 24 pi^2 (c + ctilde) (1/z + 2k ln mu)");
  const auto r = k2_pipeline(Rat(1), Rat(1));
  const PiScaled c = as_pi_scaled(r.gauge_part), ct = as_pi_scaled(r.ghost_part);
  const auto shift = f0_shift(c, ct, 2);
  CHECK(shift.factor == Rat(5603, 512));
  CHECK(shift.str() == "f0 + 5603/512 (1/z + 4 ln mu)");
  CHECK(beta_f0(c, ct, 2) == PiScaled(Rat(-5603, 128), 0));
  CHECK(beta_f0(zero, zero, 3).is_zero());
  CHECK_THROWS_AS(as_pi_scaled(hdym_counterterm().pole_coefficient), UnsupportedExact);
}

TEST_CASE("free part of the expanded action") {
  const auto check = free_part_consistency();
  REQUIRE(check.a4_ratio.has_value());
  REQUIRE(check.a6_ratio.has_value());
  CHECK(*check.a4_ratio == -ck(0));
  CHECK(*check.a6_ratio == ck(1));
  CHECK(check.a4_matches);
  CHECK(check.a6_matches);
}
