#include "specact/counterterm.hpp"

#include "specact/errors.hpp"
#include "specact/gammatrace.hpp"
#include "specact/lie_expansion.hpp"
#include "specact/spectral.hpp"

namespace specact {

namespace {

const PiScaled kFourPiSquaredInv{Rat(1, 16), -2};

InvariantPolynomial on(Basis b, const Rat& c) {
  return InvariantPolynomial::single(b, PiScaled(c, 0));
}

}  // namespace

SpectralHeatCoefficients spectral_heat_coeffs() {
  SpectralHeatCoefficients out;
  const InvariantPolynomial e2 = tr_E_power(2);
  const InvariantPolynomial e3 = tr_E_power(3);
  const InvariantPolynomial e_box_e = tr_E_power(2, true);
  const Rat spinor(kSpinorDim);

  // a4: (1/360)(180 E^2 + 60 E_{;kk} + 30 Omega^2); the middle term integrates
  // to zero and Omega = F on each spinor component.
  InvariantPolynomial a4 = PiScaled(Rat(180), 0) * e2;
  a4 += on(Basis::B1, Rat(30) * spinor);
  out.a4 = kFourPiSquaredInv * (PiScaled(Rat(1, 360), 0) * a4);

  // a6 on flat space, derivative and Omega terms:
  //   8 Omega_{ij;k}^2 + 2 Omega_{ij;j} Omega_{ik;k} + 12 Omega_{ij;kk} Omega_{ij}
  //   - 12 Omega^3 + 6 E_{;iijj} + 60 E E_{;ii} + 30 E_{;i} E_{;i} + 60 E^3
  //   + 30 E Omega^2.
  // E_{;iijj} is a total derivative, E_{;i}E_{;i} = -E E_{;ii} after partial
  // integration and tr E Omega^2 vanishes because tr gamma^a gamma^b F_ab = 0.
  InvariantPolynomial a6;
  a6 += on(Basis::B3, Rat(8) * spinor);
  a6 += on(Basis::B2, Rat(2) * spinor);
  a6 += on(Basis::B4, Rat(12) * spinor);
  a6 += on(Basis::B5, Rat(-12) * spinor);
  a6 += PiScaled(Rat(60), 0) * e_box_e;
  a6 += PiScaled(Rat(-30), 0) * e_box_e;
  a6 += PiScaled(Rat(60), 0) * e3;
  out.a6_raw = kFourPiSquaredInv * (PiScaled(Rat(1, 360), 0) * a6);
  out.a6_eliminated = eliminate_b3(out.a6_raw);
  out.a6 = reduce(out.a6_raw);
  return out;
}

PiScaled as_pi_scaled(const PiPoly& p) {
  auto c = p.coeff.as_constant();
  if (!c) throw UnsupportedExact("value carries free parameters: " + to_string(p));
  return PiScaled(*c, p.pi_power);
}

TheoryK2 theory_k2(const Rat& f0, const Rat& f_minus2, const Rat& lambda2) {
  if (f_minus2.is_zero())
    throw DomainError("f_{-2} = 0: the truncated action has no fourth-order term");
  if (lambda2.sign() <= 0) throw DomainError("Lambda^2 must be positive");
  const SpectralHeatCoefficients h = spectral_heat_coeffs();
  TheoryK2 t;
  t.f0 = f0;
  t.f_minus2 = f_minus2;
  t.lambda2 = lambda2;
  t.alpha1 = f0 * as_pi_scaled(h.a4.coefficient(Basis::B1));
  t.beta2 = f_minus2 * as_pi_scaled(h.a6.coefficient(Basis::B2));
  t.beta5 = f_minus2 * as_pi_scaled(h.a6.coefficient(Basis::B5));
  t.kappa = Rat(-2) * t.beta2;
  // all three carry pi^-2, so the ratios are rational
  t.gamma_eff = Rat(3) * t.beta5.coeff / (Rat(2) * t.beta2.coeff);
  t.lambda2_eff = Rat(2) * t.alpha1.coeff / t.beta2.coeff * lambda2;
  return t;
}

namespace {

struct OperatorPair {
  HigherLaplacian background;
  HigherLaplacian flat;
};

OperatorPair operators(const QuadraticForm& q, const std::optional<Rat>& gamma) {
  LaplacianLayers layers = extract_p2_p4(q);
  if (!layers.leading_matches || !layers.other.empty())
    throw DomainError("quadratic action is not of higher-Laplacian form");
  if (gamma) {
    layers.p2 = substitute(layers.p2, Var::Gamma, *gamma);
    layers.p4 = substitute(layers.p4, Var::Gamma, *gamma);
  }
  LaplacianLayers flat = layers;
  flat.p2 = at_zero_curvature(layers.p2);
  flat.p4 = at_zero_curvature(layers.p4);
  HigherLaplacian zero = HigherLaplacian::from_layers(flat);
  zero.curved_connection = false;
  return {HigherLaplacian::from_layers(layers), zero};
}

}  // namespace

CountertermResult hdym_counterterm(const std::optional<Rat>& gamma) {
  const OperatorPair gauge = operators(action_higher_derivative_ym(), gamma);
  const OperatorPair ghost = operators(ghost_action(), gamma);

  CountertermResult r;
  r.gauge_a4 = a4_flat(gauge.background).value;
  r.ghost_a4 = a4_flat(ghost.background).value;
  const InvariantPolynomial gauge_share =
      PiScaled(Rat(-1, 2), 0) * (r.gauge_a4 - a4_flat(gauge.flat).value);
  const InvariantPolynomial ghost_share = r.ghost_a4 - a4_flat(ghost.flat).value;
  r.divergence = gauge_share + ghost_share;
  r.gauge_part = gauge_share.coefficient(Basis::B1);
  r.ghost_part = ghost_share.coefficient(Basis::B1);
  r.pole_coefficient = r.divergence.coefficient(Basis::B1);
  return r;
}

PiPoly hdym_pole_closed() {
  const Poly g = Poly::variable(Var::Gamma);
  const Poly v = (Poly(Rat(44)) + g * Rat(36) + g * g * Rat(3)) * Rat(1, 48);
  return kFourPiSquaredInv * PiPoly(v, 0);
}

CountertermResult k2_pipeline(const Rat& f0, const Rat& f_minus2, const Rat& lambda2) {
  TheoryK2 t = theory_k2(f0, f_minus2, lambda2);
  // The overall factor kappa and the mass term do not change the pole of
  // log det(P_B P^-1) on B1, so the determinant is taken at gamma_eff alone.
  CountertermResult r = hdym_counterterm(t.gamma_eff);
  r.theory = std::move(t);
  return r;
}

F0Shift f0_shift(const PiScaled& c, const PiScaled& ctilde, int k) {
  F0Shift s;
  s.c_total = c + ctilde;
  s.k = k;
  const PiScaled f = PiScaled(Rat(24), 2) * s.c_total;
  if (!f.coeff.is_zero() && f.pi_power != 0)
    throw UnsupportedExact("c + ctilde must carry pi^-2 for a rational shift");
  s.factor = f.coeff;
  return s;
}

std::string F0Shift::str() const {
  if (factor.is_zero()) return "f0";
  return "f0 + " + factor.str() + " (1/z + " + std::to_string(2 * k) + " ln mu)";
}

std::string f0_shift_symbolic() { return "f0 + 24 pi^2 (c + ctilde) (1/z + 2k ln mu)"; }

PiScaled beta_f0(const PiScaled& c, const PiScaled& ctilde, int k) {
  return PiScaled(Rat(-48 * k), 2) * (c + ctilde);
}

namespace {

// r with a = r b, or nullopt.
std::optional<Rat> ratio(const NormalForm& a, const NormalForm& b) {
  if (b.empty()) return std::nullopt;
  auto first = b.begin()->second.as_constant();
  auto top = a.find(b.begin()->first);
  if (!first || top == a.end()) return std::nullopt;
  auto num = top->second.as_constant();
  if (!num) return std::nullopt;
  const Rat r = *num / *first;
  NormalForm scaled;
  accumulate(scaled, b, Poly(r));
  if (!(scaled == a)) return std::nullopt;
  return r;
}

std::optional<PiScaled> free_ratio(const InvariantPolynomial& coeff, int j) {
  const QuadraticForm q = expand_quadratic(coeff);
  const NormalForm lhs = at_zero_curvature(operator_normal_form(q));
  const NormalForm rhs = at_zero_curvature(operator_normal_form(linearised_fdeltaf(j)));
  auto r = ratio(lhs, rhs);
  if (!r) return std::nullopt;
  return PiScaled(*r, q.pi_power);
}

}  // namespace

FreePartCheck free_part_consistency() {
  const SpectralHeatCoefficients h = spectral_heat_coeffs();
  FreePartCheck c;
  c.a4_ratio = free_ratio(h.a4, 0);
  c.a6_ratio = free_ratio(h.a6, 1);
  c.a4_matches = c.a4_ratio && *c.a4_ratio == -ck(0);
  c.a6_matches = c.a6_ratio && *c.a6_ratio == ck(1);
  return c;
}

}  // namespace specact
