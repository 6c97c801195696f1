#include "specact/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace specact {

namespace {
constexpr const char* kNames[kVarCount] = {"F01", "F02", "F03", "F12", "F13",
                                           "F23", "Lambda2", "gamma", "N2"};
}

const char* var_name(Var v) { return kNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (name == kNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

std::pair<Var, int> curvature_var(int a, int b) {
  if (a == b || a < 0 || b < 0 || a > 3 || b > 3)
    throw std::out_of_range("curvature_var: bad index pair");
  int sign = 1;
  if (a > b) {
    std::swap(a, b);
    sign = -1;
  }
  // (0,1) (0,2) (0,3) (1,2) (1,3) (2,3)
  static constexpr int kOffset[3] = {0, 3, 5};
  int idx = kOffset[a] + (b - a - 1);
  return {static_cast<Var>(idx), sign};
}

int curvature_degree(const Monomial& m) {
  int d = 0;
  for (std::size_t i = 0; i < kCurvatureVarCount; ++i) d += m[i];
  return d;
}

Poly::Poly(const Rat& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(Var v, unsigned power) {
  Monomial m{};
  m[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
  return monomial(m, Rat(1));
}

Poly Poly::monomial(const Monomial& m, const Rat& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Poly Poly::curvature(int a, int b) {
  if (a == b) return Poly();
  auto [v, sign] = curvature_var(a, b);
  return variable(v) * Rat(sign);
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::optional<Rat> Poly::as_constant() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Rat Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m;
      for (std::size_t i = 0; i < kVarCount; ++i) m[i] = static_cast<std::uint8_t>(ma[i] + mb[i]);
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::curvature_part(int degree) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (curvature_degree(m) == degree) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::substitute(Var v, const Rat& value) const {
  auto idx = static_cast<std::size_t>(v);
  Poly r;
  for (const auto& [m, c] : terms_) {
    Monomial mm = m;
    int e = mm[idx];
    mm[idx] = 0;
    r.add_term(mm, c * value.pow(e));
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    if (!first) {
      os << (coef.sign() < 0 ? " - " : " + ");
      if (coef.sign() < 0) coef = -coef;
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < kVarCount; ++i) {
      if (!m[i]) continue;
      if (has_var) vars << "*";
      vars << kNames[i];
      if (m[i] > 1) vars << "^" << int(m[i]);
      has_var = true;
    }
    if (!has_var) {
      os << coef.str();
    } else if (coef == Rat(1)) {
      os << vars.str();
    } else if (coef == Rat(-1)) {
      os << "-" << vars.str();
    } else {
      os << coef.str() << "*" << vars.str();
    }
  }
  return os.str();
}

PiPoly operator+(const PiPoly& a, const PiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_power != b.pi_power)
    throw std::domain_error("PiPoly: adding different powers of pi");
  return PiPoly(a.coeff + b.coeff, a.pi_power);
}

PiPoly operator-(const PiPoly& a) { return PiPoly(-a.coeff, a.pi_power); }

PiPoly operator*(const PiScaled& s, const PiPoly& a) {
  return PiPoly(a.coeff * s.coeff, a.pi_power + s.pi_power);
}

PiPoly to_pipoly(const PiScaled& v) { return PiPoly(Poly(v.coeff), v.pi_power); }

std::string to_string(const PiPoly& v) {
  if (v.pi_power == 0) return v.coeff.str();
  return "(" + v.coeff.str() + ")*pi^" + std::to_string(v.pi_power);
}

}  // namespace specact
