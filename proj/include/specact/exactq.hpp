#pragma once

// Exact rational arithmetic and small combinatorial helpers.
//
// Rat is always kept in lowest terms with a positive denominator, so two
// equal values compare equal structurally and print identically.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace specact {

using BigInt = mpz_class;

class Rat {
 public:
  Rat() = default;
  Rat(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  Rat(const BigInt& num, const BigInt& den = 1);

  /// Parses "p/q" or "p" (optional leading sign). Throws std::invalid_argument.
  static Rat parse(std::string_view text);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  double to_double() const { return v_.get_d(); }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;

  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  Rat operator-() const;

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert (zero base throws).
  Rat pow(int exponent) const;

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// A rational multiple of an integer power of pi.
///
/// The zero value is canonical (coeff 0, pi_power 0). Sums are only defined
/// between equal powers of pi; zero is the identity for every power.
template <class T>
struct BasicPiScaled {
  T coeff{};
  int pi_power = 0;

  BasicPiScaled() = default;
  BasicPiScaled(T c, int p) : coeff(std::move(c)), pi_power(p) { canonicalize(); }

  bool is_zero() const { return coeff.is_zero(); }

  void canonicalize() {
    if (coeff.is_zero()) pi_power = 0;
  }

  friend bool operator==(const BasicPiScaled& a, const BasicPiScaled& b) {
    return a.coeff == b.coeff && a.pi_power == b.pi_power;
  }
};

using PiScaled = BasicPiScaled<Rat>;

PiScaled operator+(const PiScaled& a, const PiScaled& b);
PiScaled operator-(const PiScaled& a);
PiScaled operator-(const PiScaled& a, const PiScaled& b);
PiScaled operator*(const PiScaled& a, const PiScaled& b);
PiScaled operator*(const Rat& s, const PiScaled& a);
double to_double(const PiScaled& v);
/// e.g. "1/24*pi^-2".
std::string to_string(const PiScaled& v);

BigInt factorial(long n);
/// n!! with the convention (-1)!! = 0!! = 1. Throws for n < -1.
BigInt double_factorial(long n);
BigInt binomial(long n, long k);

/// Integral of s^k (1-s)^l over [0,1], i.e. k! l! / (k+l+1)!.
Rat simplex_integral(long k, long l);

}  // namespace specact
