#pragma once

// Sparse multivariate polynomials over Rat.
//
// The variable set is fixed: the six independent components of a covariantly
// constant curvature (which commute among themselves, so a commutative ring
// is exact for them), plus the symbolic parameters that thread through the
// one-loop computation.

#include "specact/exactq.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace specact {

enum class Var : std::uint8_t {
  F01, F02, F03, F12, F13, F23,
  Lambda2,  // Lambda^2
  Gamma,    // coupling of the cubic curvature term
  N2,       // trace of the identity on the gauge-algebra fiber
  kCount
};

inline constexpr std::size_t kVarCount = static_cast<std::size_t>(Var::kCount);
inline constexpr std::size_t kCurvatureVarCount = 6;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

/// Curvature generator for the antisymmetric pair (a, b), a != b, as
/// (variable, sign) with F_ba = -F_ab.
std::pair<Var, int> curvature_var(int a, int b);

using Monomial = std::array<std::uint8_t, kVarCount>;

int curvature_degree(const Monomial& m);

class Poly {
 public:
  Poly() = default;
  Poly(const Rat& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rat(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly variable(Var v, unsigned power = 1);
  static Poly monomial(const Monomial& m, const Rat& c);
  /// F_ab as a polynomial (zero when a == b).
  static Poly curvature(int a, int b);

  const std::map<Monomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term, or nullopt when the polynomial is not constant.
  std::optional<Rat> as_constant() const;
  Rat coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& s) { return a *= s; }
  friend Poly operator*(const Rat& s, Poly a) { return a *= s; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Keeps only terms with the given curvature degree.
  Poly curvature_part(int degree) const;
  /// Sets every curvature variable to zero (flat connection).
  Poly at_zero_curvature() const { return curvature_part(0); }
  /// Substitutes a rational value for a parameter variable.
  Poly substitute(Var v, const Rat& value) const;

  std::string str() const;

 private:
  std::map<Monomial, Rat> terms_;
};

using PiPoly = BasicPiScaled<Poly>;

PiPoly operator+(const PiPoly& a, const PiPoly& b);
PiPoly operator-(const PiPoly& a);
PiPoly operator*(const PiScaled& s, const PiPoly& a);
PiPoly to_pipoly(const PiScaled& v);
std::string to_string(const PiPoly& v);

}  // namespace specact
