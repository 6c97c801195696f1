#pragma once

// Quadratic parts of gauge-invariant functionals around a covariantly
// constant background connection B, in the fluctuation A of B + A.

#include "specact/invariants.hpp"
#include "specact/operator_terms.hpp"

namespace specact {

/// Quadratic part of the integral of each basis invariant. Vol has none.
QuadraticForm expand_invariant(Basis b);

/// Quadratic part of an invariant polynomial. Every coefficient must carry
/// the same power of pi, which is recorded on the result.
QuadraticForm expand_quadratic(const InvariantPolynomial& action);

/// -1/2 integral tr (div A) Delta (div A).
QuadraticForm gauge_fixing_box();
/// -1/2 integral tr (div A)^2.
QuadraticForm gauge_fixing_mass();
/// Ghost action -integral Cbar (Delta^2 + Lambda^2 Delta) C, with Lambda^2
/// symbolic.
QuadraticForm ghost_action();

/// -1/2 B2 plus the box gauge fixing.
QuadraticForm action_div_f_squared();
/// 1/4 B4 plus the box gauge fixing.
QuadraticForm action_f_box_f();
/// -1/3 B5.
QuadraticForm action_f_cubed();
/// div-F-squared + gamma F-cubed - Lambda^2/4 B1 - Lambda^2/2 integral (div A)^2, with
/// gamma and Lambda^2 symbolic.
QuadraticForm action_higher_derivative_ym();

/// integral tr Fhat_{ab} Delta^j Fhat_{ab} with Fhat = dA - dA, built
/// directly from the linearised field strength.
QuadraticForm linearised_fdeltaf(int j);

}  // namespace specact
