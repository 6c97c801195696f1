#include "doctest.h"
#include "specact/errors.hpp"
#include "specact/gilkey.hpp"
#include "specact/lie_expansion.hpp"

#include <random>

using namespace specact;

namespace {

const PiScaled kInv16Pi2(Rat(1, 16), -2);

Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  return Rat(num(rng), den(rng));
}

InvariantPolynomial on(Basis b, const PiPoly& c) { return InvariantPolynomial::single(b, c); }

std::vector<OperatorTerm> scaled_terms(const QuadraticForm& q, const Poly& s) {
  return q.scaled(s).terms;
}

}  // namespace

TEST_CASE("totally symmetric contraction of the identity") {
  CHECK(symmetric_delta_norm(2) == Rat(1));
  CHECK(symmetric_delta_norm(3) == Rat(4));
  CHECK(symmetric_delta_norm(4) == Rat(24));
  CHECK_THROWS_AS(symmetric_delta_norm(1), MalformedInput);
}

TEST_CASE("volume and second coefficients") {
  const HigherLaplacian scalar = HigherLaplacian::from_structures(2, {}, true);
  const auto v = a0(scalar, Poly(1));
  CHECK(v.value == on(Basis::Vol, to_pipoly(PiScaled(Rat(1, 32), -2))));
  CHECK_FALSE(v.gamma_arg.has_value());
  CHECK(a0(scalar, Poly(0)).value.is_zero());
  CHECK(a0(HigherLaplacian::from_structures(3, {}, true), Poly(1)).gamma_arg == Rat(2, 3));

  CHECK(a2(HigherLaplacian::from_structures(2, {Poly(5), Poly(1), Poly(-2), Poly(0)})).value.is_zero());
  CHECK(a2(HigherLaplacian::from_structures(2, {})).value.is_zero());
  const Poly L = Poly::variable(Var::Lambda2);
  const Poly fiber = Poly::variable(Var::N2) - Poly(1);
  const auto massive = a2(HigherLaplacian::from_structures(2, {0, 0, 0, -L}, true), fiber);
  CHECK(massive.gamma_arg == Rat(1, 2));
  // (1/k)(1/4k)(4 pi)^-2 tr(p2_aa) with tr(p2_aa) = -4 Lambda^2 (N^2 - 1)
  CHECK(massive.value == on(Basis::Vol, kInv16Pi2 * PiPoly(L * fiber * Rat(-1, 4), 0)));
}

TEST_CASE("trace of the squared second-order symbol") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng);
    const auto P = HigherLaplacian::from_structures(2, {a, b, c, Poly(0)});
    CHECK(p2_square_trace(P, default_fiber()) == p2_square_trace_closed(a, b, c));
  }
  CHECK(p2_square_trace_closed(1, 0, 0) == on(Basis::B1, PiPoly(Poly(-24), 0)));
}

TEST_CASE("fourth coefficient of the reference operators") {
  auto with_preset = [](const P2Spec& p2, const std::string& preset) {
    HigherLaplacian P = HigherLaplacian::from_structures(2, p2);
    P.with_p4_terms(p4_preset(preset));
    return a4_flat(P).value;
  };
  CHECK(with_preset({4, 0, 0, 0}, "S1") == on(Basis::B1, kInv16Pi2 * PiPoly(Rat(-40, 24), 0)));
  CHECK_THROWS_AS(p4_preset("S4"), MalformedInput);

  // ghost: only the connection term survives on B1, the mass gives Vol
  const Poly L = Poly::variable(Var::Lambda2);
  const auto ghost = a4_flat(HigherLaplacian::from_structures(2, {0, 0, 0, -L}, true));
  CHECK(ghost.value == on(Basis::B1, to_pipoly(kInv16Pi2 * PiScaled(Rat(1, 12), 0))) +
                           on(Basis::Vol, kInv16Pi2 * PiPoly(Poly::variable(Var::N2) * L * L * Rat(1, 4), 0)));
}

TEST_CASE("the mass term only moves the volume coefficient") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const Rat a = random_rat(rng), b = random_rat(rng), c = random_rat(rng), lambda = random_rat(rng);
    for (const std::string preset : {"S1", "S2", "S3", "none"}) {
      HigherLaplacian plain = HigherLaplacian::from_structures(2, {a, b, c, 0});
      plain.with_p4_terms(p4_preset(preset));
      HigherLaplacian massive = HigherLaplacian::from_structures(2, {a, b, c, lambda});
      auto terms = p4_preset(preset);
      for (const auto& t : scaled_terms(structures::p4_f(), Poly(-lambda))) terms.push_back(t);
      massive.with_p4_terms(terms);
      const auto lhs = a4_flat(plain).value, rhs = a4_flat(massive).value;
      CHECK(lhs.coefficient(Basis::B1) == rhs.coefficient(Basis::B1));
    }
  }
}

TEST_CASE("scalar operators ignore the vector structures") {
  std::mt19937_64 rng(61);
  const auto reference = a4_flat(HigherLaplacian::from_structures(2, {0, 0, 0, Poly(3)}, true)).value;
  for (int trial = 0; trial < 20; ++trial) {
    const auto P = HigherLaplacian::from_structures(2, {random_rat(rng), random_rat(rng), random_rat(rng), Poly(3)}, true);
    CHECK(a4_flat(P).value == reference);
  }
}

TEST_CASE("sixth-order operators") {
  CHECK(a4_k3({}, {}).value.is_zero());
  K3P4Spec d_only;
  d_only.d = 1;
  CHECK(a4_k3({}, d_only).value == on(Basis::B1, kInv16Pi2 * PiPoly(Rat(16, 12), 0)));

  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    K3P4Spec s{random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng),
               random_rat(rng), random_rat(rng), random_rat(rng), random_rat(rng)};
    const P2Spec p2{random_rat(rng), random_rat(rng), random_rat(rng), 0};

    // -S(p4) collapses onto two curvature structures and the identity
    SlotTensor collapsed = symmetric_contraction(k3_p4_tensor(s));
    collapsed += k3_collapse(s);
    CHECK(collapsed == SlotTensor(4, 0));

    // the general route keeps the connection term that the closed form leaves out
    HigherLaplacian P = HigherLaplacian::from_structures(3, p2);
    P.with_k3_p4(s);
    const auto general = a4_flat(P);
    const auto closed = a4_k3(p2, s);
    const auto diff = general.value - closed.value;
    CHECK(diff == on(Basis::B1, to_pipoly(PiScaled(Rat(1, 48), -2))));
  }
}

TEST_CASE("fiber traces") {
  CHECK(fiber_trace(Poly(3), Poly(2)) == on(Basis::Vol, PiPoly(Poly(6), 0)));
  CHECK(fiber_trace(Poly::curvature(0, 1), Poly(1)).is_zero());
  CHECK_THROWS_AS(fiber_trace(Poly::curvature(0, 1) * Poly::curvature(0, 1), Poly(1)), DomainError);
  const Poly cubic = Poly::curvature(0, 1) * Poly::curvature(1, 2) * Poly::curvature(2, 0);
  CHECK_THROWS_AS(fiber_trace(cubic, Poly(1)), UnsupportedExact);
}
