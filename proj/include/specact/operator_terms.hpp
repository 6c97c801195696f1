#pragma once

// Index-contracted differential operators acting on adjoint-valued fields
// over a covariantly constant background.
//
// A term is coeff * (letter_1 ... letter_n) with outer slots. Letters are
// covariant derivatives or adjoint actions of the background curvature and
// act right-to-left on the field. In a quadratic action the two outer slots
// are the vector indices of the left and right gauge field (-1 for a scalar
// field). In an operator identity the outer slots are the free indices.

#include "specact/poly.hpp"

#include <string>
#include <vector>

namespace specact {

struct Letter {
  enum class Kind : std::uint8_t { Nabla, AdF };
  Kind kind = Kind::Nabla;
  int i = 0;
  int j = 0;  // second curvature index, unused for Nabla

  static Letter nabla(int i) { return {Kind::Nabla, i, 0}; }
  static Letter adf(int i, int j) { return {Kind::AdF, i, j}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline constexpr int kScalarSlot = -1;

struct OperatorTerm {
  Poly coeff{Rat(1)};
  std::vector<int> outer;
  Word letters;

  int nabla_count() const;
  std::vector<int> indices() const;  // distinct, in first-appearance order

  friend bool operator==(const OperatorTerm&, const OperatorTerm&) = default;
};

/// Throws MalformedInput unless every index occurs exactly twice across the
/// outer slots and letters, except indices listed in free which occur once.
void check_contraction(const OperatorTerm& t, const std::vector<int>& free = {});

/// Relabels indices 0,1,2,... by first appearance (outer slots first).
OperatorTerm relabel_canonical(const OperatorTerm& t);

/// Integration-by-parts adjoint of a quadratic-action term: swaps the outer
/// slots, reverses the word and picks up (-1)^length.
OperatorTerm transpose(const OperatorTerm& t);

std::string to_string(const OperatorTerm& t);

enum class FormKind {
  Gauge,     // action = sum of integral tr A_l W A_r, operator -(X + X^T)
  Ghost,     // action = sum of integral Cbar W C, operator -X
  Operator,  // a bare operator; outer slots are free indices
};

struct QuadraticForm {
  FormKind kind = FormKind::Gauge;
  int k = 2;          // operator order 2k
  int pi_power = 0;   // common power of pi carried by every coefficient
  std::vector<OperatorTerm> terms;

  QuadraticForm& operator+=(const QuadraticForm& o);
  QuadraticForm scaled(const Poly& s) const;
};

/// Relabels every term canonically and merges equal words; zero terms are
/// dropped and the list is sorted.
QuadraticForm canonical_terms(const QuadraticForm& q);

}  // namespace specact
