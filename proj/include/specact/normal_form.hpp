#pragma once

// Normal forms of differential operators over a covariantly constant
// background.
//
// Over such a background the curvature components commute with each other
// and with every covariant derivative, and [nabla_a, nabla_b] = adF_ab. An
// operator is therefore determined by its components: for each value of the
// outer indices, a polynomial in the six curvature components for every
// fully symmetrised (Weyl-ordered) product of derivatives. That component
// table is the normal form; two operators are equal iff their tables are.

#include "specact/operator_terms.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

namespace specact {

using NablaCounts = std::array<std::uint8_t, 4>;  // multiplicity of each direction

struct NFKey {
  std::vector<int> outer;  // concrete values, -1 for a scalar slot
  NablaCounts nablas{};

  int order() const { return nablas[0] + nablas[1] + nablas[2] + nablas[3]; }
  friend auto operator<=>(const NFKey&, const NFKey&) = default;
  friend bool operator==(const NFKey&, const NFKey&) = default;
};

using NormalForm = std::map<NFKey, Poly>;

void accumulate(NormalForm& into, const NormalForm& from, const Poly& scale = Poly(Rat(1)));
NormalForm difference(const NormalForm& a, const NormalForm& b);
/// Entries with the given number of derivatives.
NormalForm layer(const NormalForm& nf, int order);
/// Sets every curvature component to zero.
NormalForm at_zero_curvature(const NormalForm& nf);
NormalForm substitute(const NormalForm& nf, Var v, const Rat& value);

/// Rewrites concrete derivative words into the symmetrised basis.
///
/// Sorting uses nabla_a nabla_b -> nabla_b nabla_a + F_ab on an adjacent
/// inversion. By default the leftmost inversion is fixed and results are
/// memoised; with a seed the inversion is picked at random and nothing is
/// cached, which exercises a different rewrite path on every call.
class WeylRewriter {
 public:
  WeylRewriter() = default;
  explicit WeylRewriter(std::uint64_t seed);

  using ConcreteWord = std::vector<std::uint8_t>;

  /// Sorted (non-decreasing) words with their polynomial coefficients.
  std::map<ConcreteWord, Poly> sorted_form(const ConcreteWord& word);
  /// Symmetrised products keyed by multiplicities.
  std::map<NablaCounts, Poly> weyl_form(const ConcreteWord& word);

 private:
  std::map<NablaCounts, Poly> sorted_to_weyl(const NablaCounts& m);

  bool randomized_ = false;
  std::mt19937_64 rng_;
  std::map<ConcreteWord, std::map<ConcreteWord, Poly>> sorted_memo_;
  std::map<NablaCounts, std::map<NablaCounts, Poly>> weyl_memo_;
};

/// Normal form of sum(terms) read as bare operators (no transposition).
NormalForm normal_form(const std::vector<OperatorTerm>& terms, WeylRewriter& rw);
NormalForm normal_form(const std::vector<OperatorTerm>& terms);

/// Normal form of the self-adjoint operator of a quadratic action: for a
/// gauge action -(X + X^T), for a ghost action -X, for a bare operator X.
NormalForm operator_normal_form(const QuadraticForm& q, WeylRewriter& rw);
NormalForm operator_normal_form(const QuadraticForm& q);

/// Delta^k g (vector fields) or Delta^k (scalars) with Delta = -nabla.nabla.
QuadraticForm leading_term(int k, bool scalar);

struct LaplacianLayers {
  int k = 2;
  bool scalar = false;
  bool leading_matches = false;  // the top layer is exactly Delta^k
  NormalForm p2;     // two-derivative layer, symmetric in the derivatives
  NormalForm p4;     // derivative-free layer
  NormalForm other;  // any remaining layer (odd orders); empty when well formed
};

/// Splits P = Delta^2 g + p2 nabla nabla + p4 for an order-4 operator. An
/// operator without a four-derivative layer is treated as a perturbation:
/// nothing is subtracted and leading_matches stays false.
LaplacianLayers extract_p2_p4(const QuadraticForm& q);
LaplacianLayers extract_p2_p4(const NormalForm& op, bool scalar);

/// Readable tensor structures with outer indices (mu, nu).
namespace structures {
QuadraticForm p2_f_g();        // adF^{mu nu} g_{ab} nabla^a nabla^b
QuadraticForm p2_fmu_g();      // (adF^mu_b g^nu_a + adF^mu_a g^nu_b) nabla^a nabla^b
QuadraticForm p2_fnu_g();      // (adF^nu_b g^mu_a + adF^nu_a g^mu_b) nabla^a nabla^b
QuadraticForm p2_g_g(bool scalar = false);  // g^{mu nu} g_{ab} nabla^a nabla^b
QuadraticForm p4_ff_g(bool scalar = false); // adF_{kl} adF^{kl} g^{mu nu}
QuadraticForm p4_fmk_fnk();    // adF^{mu k} adF^nu_k
QuadraticForm p4_f();          // adF^{mu nu}
QuadraticForm p4_g(bool scalar = false);    // g^{mu nu}
}  // namespace structures

/// Coefficients x_i with layer = sum x_i basis_i, solved exactly. Parameters
/// (Lambda^2, gamma, N2) in the target are carried into the coefficients.
/// nullopt when the layer is not in the span.
std::optional<std::vector<Poly>> decompose(const NormalForm& layer,
                                           const std::vector<NormalForm>& basis);

struct StructureCoefficients {
  std::vector<Poly> p2;  // on p2_f_g, p2_fmu_g, p2_fnu_g, p2_g_g
  std::vector<Poly> p4;  // on p4_ff_g, p4_fmk_fnk, p4_f, p4_g
};

/// Readable form of the layers of a vector-field operator, or nullopt when a
/// layer leaves the span of the standard structures.
std::optional<StructureCoefficients> readable_structures(const LaplacianLayers& layers);

enum class CommutationRelation { A, B, C };

/// Checks one of the three commutation identities for second and fourth
/// order operators on an adjoint field, optionally composed on the left with
/// a prefix word whose free indices are listed in prefix_free.
bool check_commutation_identity(CommutationRelation relation, const Word& prefix = {},
                   const std::vector<int>& prefix_free = {});

}  // namespace specact
