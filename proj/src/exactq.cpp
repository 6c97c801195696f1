#include "specact/exactq.hpp"

#include <ostream>
#include <cmath>
#include <stdexcept>

namespace specact {

Rat::Rat(long num, long den) : Rat(BigInt(num), BigInt(den)) {}

Rat::Rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rat: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("bad integer");
    for (std::size_t j = i; j < s.size(); ++j)
      if (s[j] < '0' || s[j] > '9')
        throw std::invalid_argument("bad integer '" + std::string(s) + "'");
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return BigInt(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  BigInt den = parse_int(trim(text.substr(slash + 1)));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rat(parse_int(trim(text.substr(0, slash))), den);
}

std::string Rat::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("Rat: division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::operator-() const {
  Rat r;
  r.v_ = -v_;
  return r;
}

Rat Rat::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("Rat: zero to a negative power");
    return Rat(1) / pow(-exponent);
  }
  Rat result(1), base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

PiScaled operator+(const PiScaled& a, const PiScaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power != b.pi_power)
    throw std::domain_error("PiScaled: adding different powers of pi");
  return PiScaled(a.coeff + b.coeff, a.pi_power);
}

PiScaled operator-(const PiScaled& a) { return PiScaled(-a.coeff, a.pi_power); }
PiScaled operator-(const PiScaled& a, const PiScaled& b) { return a + (-b); }

PiScaled operator*(const PiScaled& a, const PiScaled& b) {
  return PiScaled(a.coeff * b.coeff, a.pi_power + b.pi_power);
}

PiScaled operator*(const Rat& s, const PiScaled& a) { return PiScaled(s * a.coeff, a.pi_power); }

double to_double(const PiScaled& v) {
  return v.coeff.to_double() * std::pow(3.14159265358979323846, v.pi_power);
}

std::string to_string(const PiScaled& v) {
  if (v.pi_power == 0) return v.coeff.str();
  return v.coeff.str() + "*pi^" + std::to_string(v.pi_power);
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt double_factorial(long n) {
  if (n < -1) throw std::domain_error("double factorial below -1");
  if (n <= 0) return 1;
  BigInt r;
  mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rat simplex_integral(long k, long l) {
  if (k < 0 || l < 0) throw std::domain_error("simplex_integral: negative exponent");
  return Rat(factorial(k) * factorial(l), factorial(k + l + 1));
}

}  // namespace specact
