#pragma once

// Traces of Euclidean Dirac matrices in four dimensions and their
// contraction against antisymmetric curvature slots.

#include "specact/invariants.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace specact {

inline constexpr int kSpinorDim = 4;  // tr 1 over spinors

using Pairing = std::vector<std::pair<int, int>>;  // position pairs, i < j, sorted

struct MetricTerm {
  Rat coeff;  // includes the spinor trace factor
  Pairing pairing;
};

/// tr(gamma^{l_0} ... gamma^{l_{2m-1}}) as a signed sum of metric products.
struct MetricMonomialSum {
  std::vector<std::string> labels;
  std::vector<MetricTerm> terms;

  /// Label-level form: each term as sorted label pairs, equal keys merged.
  std::map<std::vector<std::pair<std::string, std::string>>, Rat> by_labels() const;
  /// Contracts repeated labels with the flat metric in dimension 4. The
  /// result is keyed by the pairing of the remaining free labels.
  std::map<std::vector<std::pair<std::string, std::string>>, Rat> contract_repeated() const;

  std::string str() const;
};

MetricMonomialSum trace_gammas(const std::vector<std::string>& labels);

/// A curvature factor F_{ab} in a colour-ordered product.
struct FSlot {
  int position;   // colour order, 0-based
  std::string a;
  std::string b;
  bool boxed = false;  // carries a covariant Laplacian
};

/// Product of closed index cycles, each a list of slot positions read in
/// index order: (0,1,2) stands for F0_{xy} F1_{yz} F2_{zx}. Canonical: each
/// cycle starts at its smallest slot and runs towards the smaller neighbour.
using CycleProduct = std::vector<std::vector<int>>;

/// Contracts every term of the trace with the slots. Each trace label must
/// occur in exactly one slot. Terms with a cycle through a single slot vanish.
std::map<CycleProduct, Rat> contract_slots(const MetricMonomialSum& trace,
                                           const std::vector<FSlot>& slots);

/// Reads a contraction of at most three slots on the invariant basis.
/// Throws UnsupportedExact for shapes outside it.
InvariantPolynomial cycles_to_invariants(const std::map<CycleProduct, Rat>& cycles,
                                         const std::vector<FSlot>& slots);

/// E = +1/2 gamma^m gamma^n F_{mn}.
inline constexpr int kEndomorphismSign = +1;

/// tr over spinors of E^power (power 1..3); with box, tr E (Box E) for power 2.
InvariantPolynomial tr_E_power(int power, bool box = false);

}  // namespace specact
