#pragma once

// Gauge-invariant local functionals on a flat 4-manifold, as linear
// combinations of a fixed basis. Coefficients are pi-scaled polynomials so a
// single value can carry symbolic couplings.

#include "specact/poly.hpp"

#include <map>
#include <string>

namespace specact {

enum class Basis {
  Vol,  // integral of 1
  B1,   // tr F_{mn} F^{mn}
  B2,   // tr F^{mn}_{;m} F^{rn}_{;r}
  B3,   // tr F_{mn;k} F^{mn;k}
  B4,   // tr F_{mn} F^{mn;r}_r
  B5,   // tr F_m^n F_n^r F_r^m
};

const char* basis_name(Basis b);
Basis basis_from_name(const std::string& name);  // throws MalformedInput

class InvariantPolynomial {
 public:
  InvariantPolynomial() = default;

  static InvariantPolynomial single(Basis b, const PiPoly& c);
  static InvariantPolynomial single(Basis b, const PiScaled& c) { return single(b, to_pipoly(c)); }

  const std::map<Basis, PiPoly>& coeffs() const { return coeffs_; }
  PiPoly coefficient(Basis b) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(Basis b, const PiPoly& c);

  InvariantPolynomial& operator+=(const InvariantPolynomial& o);
  friend InvariantPolynomial operator+(InvariantPolynomial a, const InvariantPolynomial& b) {
    return a += b;
  }
  friend InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b);
  friend InvariantPolynomial operator*(const PiScaled& s, const InvariantPolynomial& p);
  friend InvariantPolynomial operator*(const Poly& s, const InvariantPolynomial& p);
  friend bool operator==(const InvariantPolynomial& a, const InvariantPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Substitutes a rational value for a parameter in every coefficient.
  InvariantPolynomial substitute(Var v, const Rat& value) const;

  std::string str() const;

 private:
  std::map<Basis, PiPoly> coeffs_;
};

/// Integration by parts: B3 = -B4.
InvariantPolynomial eliminate_b3(const InvariantPolynomial& p);
/// Additionally the Bianchi identity B4 = -2 B2 - 4 B5; the result lives on
/// {Vol, B1, B2, B5}.
InvariantPolynomial reduce(const InvariantPolynomial& p);

}  // namespace specact
