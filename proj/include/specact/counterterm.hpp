#pragma once

// From the heat coefficients of the squared Dirac operator to the one-loop
// divergence of the resulting fourth-order gauge theory and the running of
// f0.

#include "specact/gilkey.hpp"
#include "specact/invariants.hpp"

#include <optional>
#include <string>

namespace specact {

struct SpectralHeatCoefficients {
  InvariantPolynomial a4;             // on B1
  InvariantPolynomial a6_raw;         // as assembled, with B3
  InvariantPolynomial a6_eliminated;  // B3 traded for B4
  InvariantPolynomial a6;             // on B2, B5
};

/// a4 and a6 of D_A^2 = Delta - E on flat space, with the spinor traces taken
/// by the gamma-matrix engine.
SpectralHeatCoefficients spectral_heat_coeffs();

/// The fourth-order theory read off f0 a4 + f_{-2} Lambda^{-2} a6: after
/// dividing by kappa it is div-F-squared + gamma_eff F-cubed with the
/// Yang-Mills term at mass^2 lambda2_eff.
struct TheoryK2 {
  Rat f0;
  Rat f_minus2;
  Rat lambda2;               // Lambda^2
  PiScaled alpha1;           // B1 coefficient, f0 a4
  PiScaled beta2;            // B2 coefficient times Lambda^2
  PiScaled beta5;            // B5 coefficient times Lambda^2
  PiScaled kappa;            // overall factor times Lambda^2, -2 beta2
  Rat gamma_eff;             // 3 beta5 / (2 beta2)
  Rat lambda2_eff;           // 2 alpha1 / beta2 * Lambda^2 = -5 f0 Lambda^2 / f_{-2}
};

/// DomainError when f_{-2} = 0: the theory drops to second order.
TheoryK2 theory_k2(const Rat& f0, const Rat& f_minus2, const Rat& lambda2 = Rat(1));

struct CountertermResult {
  InvariantPolynomial gauge_a4;    // a4 of the gauge operator on the background
  InvariantPolynomial ghost_a4;    // a4 of the ghost operator on the background
  InvariantPolynomial divergence;  // -1/2 (gauge - flat) + (ghost - flat)
  PiPoly gauge_part;               // c: B1 coefficient of the gauge share
  PiPoly ghost_part;               // ctilde: B1 coefficient of the ghost share
  PiPoly pole_coefficient;         // c + ctilde, the 1/z coefficient of B1
  std::optional<TheoryK2> theory;
};

/// One-loop divergence of the higher-derivative theory at coupling gamma;
/// nullopt keeps gamma symbolic. Computed from the quadratic action through
/// the normal form and the heat coefficients.
CountertermResult hdym_counterterm(const std::optional<Rat>& gamma = std::nullopt);
/// (44 + 36 gamma + 3 gamma^2)/48 (4 pi)^-2 with gamma symbolic.
PiPoly hdym_pole_closed();

CountertermResult k2_pipeline(const Rat& f0, const Rat& f_minus2, const Rat& lambda2 = Rat(1));

/// f0 -> f0 + 24 pi^2 (c + ctilde)(1/z + 2k ln mu).
struct F0Shift {
  PiScaled c_total;  // c + ctilde
  int k = 2;
  Rat factor;        // 24 pi^2 (c + ctilde)
  std::string str() const;
};

F0Shift f0_shift(const PiScaled& c, const PiScaled& ctilde, int k);
std::string f0_shift_symbolic();

/// mu d f0 / d mu = -48 k pi^2 (c + ctilde).
PiScaled beta_f0(const PiScaled& c, const PiScaled& ctilde, int k);

/// PiScaled value of a parameter-free PiPoly; throws UnsupportedExact
/// otherwise.
PiScaled as_pi_scaled(const PiPoly& p);

/// Free-part consistency: at zero background, f0 a4 and Lambda^-2 f_{-2} a6
/// must reproduce -c0 and +c1 times the linearised F Delta^j F terms.
struct FreePartCheck {
  std::optional<PiScaled> a4_ratio;  // NF(a4) / NF(F F), nullopt if not proportional
  std::optional<PiScaled> a6_ratio;  // NF(a6) / NF(F Delta F)
  bool a4_matches = false;           // a4_ratio == -c0
  bool a6_matches = false;           // a6_ratio == c1
};

FreePartCheck free_part_consistency();

}  // namespace specact
