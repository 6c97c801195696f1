#include "doctest.h"
#include "oracles.hpp"
#include "specact/exactq.hpp"
#include "specact/poly.hpp"

#include <random>

using namespace specact;

namespace {

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 30);
  return Rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rat(6, 4).str() == "3/2");
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat(0, 5).str() == "0");
  CHECK(Rat::parse("-10/4") == Rat(-5, 2));
  CHECK(Rat::parse("7") == Rat(7));
  CHECK_THROWS_AS(Rat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rat::parse("x"), std::invalid_argument);
  CHECK_THROWS(Rat(1, 0));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
}

TEST_CASE("rational field axioms on random triples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rat::parse((a * b).str()) == a * b);
  }
}

TEST_CASE("combinatorial helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(6) == 720);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(5) == 15);
  CHECK_THROWS(double_factorial(-2));
  CHECK(binomial(10, 3) == 120);
  for (long k = 0; k <= 50; ++k) {
    BigInt pow2 = 1;
    for (long i = 0; i < k; ++i) pow2 *= 2;
    CHECK(factorial(2 * k) == double_factorial(2 * k - 1) * pow2 * factorial(k));
  }
}

TEST_CASE("simplex integrals") {
  CHECK(simplex_integral(0, 0) == Rat(1));
  CHECK(simplex_integral(1, 1) == Rat(1, 6));
  CHECK(simplex_integral(2, 3) == Rat(1, 60));
  for (int k = 0; k <= 30; ++k) {
    CHECK(simplex_integral(k, 0) == Rat(1, k + 1));
    for (int l = 0; l <= 30; ++l) CHECK(simplex_integral(k, l) == simplex_integral(l, k));
  }
  for (int k = 0; k <= 6; ++k)
    for (int l = 0; l <= 6; ++l)
      CHECK(simplex_integral(k, l).to_double() ==
            doctest::Approx(oracle::simplex_quadrature(k, l)).epsilon(1e-12));
}

TEST_CASE("pi-scaled arithmetic") {
  const PiScaled a(Rat(1, 24), -2), b(Rat(1, 120), -2);
  CHECK(a + b == PiScaled(Rat(1, 20), -2));
  CHECK(a * b == PiScaled(Rat(1, 2880), -4));
  CHECK(a - a == PiScaled());
  CHECK((a - a).pi_power == 0);
  CHECK(a + PiScaled() == a);
  CHECK_THROWS(a + PiScaled(Rat(1), 0));
  CHECK(to_double(a) == doctest::Approx(1.0 / (24 * M_PI * M_PI)));
}

TEST_CASE("polynomials over curvature components") {
  CHECK(Poly::curvature(2, 2).is_zero());
  CHECK(Poly::curvature(1, 0) == -Poly::curvature(0, 1));
  const Poly g = Poly::variable(Var::Gamma);
  const Poly p = (g + Rat(1)) * (g - Rat(1));
  CHECK(p == g * g - Poly(1));
  CHECK(p.substitute(Var::Gamma, Rat(3)) == Poly(8));
  CHECK(p.as_constant() == std::nullopt);
  const Poly f = Poly::curvature(0, 1) * Poly::curvature(2, 3) + g;
  CHECK(f.curvature_part(2) == Poly::curvature(0, 1) * Poly::curvature(2, 3));
  CHECK(f.at_zero_curvature() == g);
}
