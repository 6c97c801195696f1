#pragma once

// Heat-trace coefficients a0, a2, a4 of higher-order Laplacians
//   P = Delta^k + p2_{ab} nabla_a nabla_b Delta^{k-2} + ... + p_{2k}
// on flat four-dimensional space, acting on adjoint-valued vector fields or
// on adjoint-valued scalars (ghosts).
//
// Traces: every endomorphism is a matrix over the vector (or scalar) slot
// whose entries are polynomials in the commuting curvature components. The
// internal trace maps a constant c to c * fiber and the rotation-invariant
// quadratic sum_{ab} adF_ab adF_ab to one unit of B1; adF itself is
// traceless.

#include "specact/invariants.hpp"
#include "specact/normal_form.hpp"

#include <optional>
#include <string>
#include <vector>

namespace specact {

/// A fiber-matrix valued tensor with `rank` spacetime slots.
class SlotTensor {
 public:
  SlotTensor() = default;
  SlotTensor(int fiber, int rank);

  int fiber() const { return fiber_; }
  int rank() const { return rank_; }

  Poly& at(int row, int col, const std::vector<int>& slots = {});
  const Poly& at(int row, int col, const std::vector<int>& slots = {}) const;

  SlotTensor& operator+=(const SlotTensor& o);
  friend bool operator==(const SlotTensor&, const SlotTensor&) = default;

 private:
  std::size_t offset(int row, int col, const std::vector<int>& slots) const;

  int fiber_ = 0;
  int rank_ = 0;
  std::vector<Poly> data_;
};

/// a adF^{mn} g_{ab} + b (adF^m_b g^n_a + adF^m_a g^n_b)
///   + c (adF^n_b g^m_a + adF^n_a g^m_b) + lambda g_{ab} g^{mn}.
/// For scalar operators only lambda is used.
struct P2Spec {
  Poly a, b, c, lambda;
};

/// Minus the k = 3 derivative-free-in-the-field layer on eight structures,
/// each carrying two symmetric derivative slots (alpha, beta):
///   d adF_kl adF^kl g_ab g^mn, e adF_k^m adF^kn g_ab, f adF_kl adF^kl g^m_a g^n_b,
///   g adF_a^l adF_bl g^mn, h adF_a^m adF_b^n, kk adF^mk adF_bk g^n_a,
///   l adF^nk adF_bk g^m_a, m g^mn g_ab.
struct K3P4Spec {
  Poly d, e, f, g, h, kk, l, m;
};

struct HigherLaplacian {
  int k = 2;
  bool scalar_only = false;
  SlotTensor p2;  // rank 2: (alpha, beta)
  SlotTensor p4;  // rank 2k - 4
  bool has_odd_terms = false;  // odd-order layers were present and ignored
  bool curved_connection = true;  // false for the zero background: Omega = 0

  int fiber_rank() const { return scalar_only ? 1 : 4; }

  /// p2 from the structure coefficients, p4 zero.
  static HigherLaplacian from_structures(int k, const P2Spec& p2, bool scalar_only = false);
  /// Reads p2 and p4 off the normal-form layers of an order-4 operator.
  static HigherLaplacian from_layers(const LaplacianLayers& layers);

  /// Sets p4 (k = 2) from bare operator terms with outer slots (mu, nu) and
  /// curvature letters only.
  HigherLaplacian& with_p4_terms(const std::vector<OperatorTerm>& terms);
  /// Sets p4 (k = 3) from the eight-structure ansatz.
  HigherLaplacian& with_k3_p4(const K3P4Spec& spec);
};

/// The p4 operator terms of the three reference actions ("S1", "S2", "S3")
/// or "none". Throws MalformedInput for other names.
std::vector<OperatorTerm> p4_preset(const std::string& name);

struct HeatCoefficient {
  InvariantPolynomial value;
  std::optional<Rat> gamma_arg;  // value is to be multiplied by Gamma(gamma_arg)
  std::vector<std::string> warnings;
};

/// Internal trace of a curvature polynomial. Throws DomainError for
/// quadratic forms that are not rotation invariant, UnsupportedExact above
/// degree two.
InvariantPolynomial fiber_trace(const Poly& p, const Poly& fiber);
/// Internal trace of the slot trace of a rank-0 tensor.
InvariantPolynomial fiber_trace(const SlotTensor& t, const Poly& fiber);

/// Totally symmetric contraction: the sum over all perfect matchings of the
/// slots of the contracted tensor. The result has rank 0.
SlotTensor symmetric_contraction(const SlotTensor& t);
/// S(delta^{k-2}) from the same contraction (1, 4, 24 for k = 2, 3, 4).
Rat symmetric_delta_norm(int k);

/// tr(p2_a^a p2_b^b + 2 p2_a^b p2_b^a), contracted symbolically.
InvariantPolynomial p2_square_trace(const HigherLaplacian& P, const Poly& fiber);
/// 24 (-a^2 - ab + ac + 2bc) B1.
InvariantPolynomial p2_square_trace_closed(const Poly& a, const Poly& b, const Poly& c);

/// The k = 3 p4 tensor of the ansatz (sign included: this is p4, not -p4).
SlotTensor k3_p4_tensor(const K3P4Spec& spec);
/// (4d+f+g) adF^2 g + (4e+h+kk+l) adF_k^m adF^kn + 4m g, as a rank-0 tensor.
SlotTensor k3_collapse(const K3P4Spec& spec);

const Poly& default_fiber();  // the symbol N2

HeatCoefficient a0(const HigherLaplacian& P, const Poly& fiber = default_fiber());
HeatCoefficient a2(const HigherLaplacian& P, const Poly& fiber = default_fiber());
/// Flat four-dimensional a4 including the curvature term (1/12) tr Omega^2.
HeatCoefficient a4_flat(const HigherLaplacian& P, const Poly& fiber = default_fiber());
/// The closed k = 3 form: N m (4/3) Vol + (1/12)[2(-a^2-ab+ac+2bc) + 16d + 4e
/// + 4f + 4g + h + kk + l] B1, both over (4 pi)^2.
HeatCoefficient a4_k3(const P2Spec& p2, const K3P4Spec& p4, const Poly& fiber = default_fiber());

}  // namespace specact
