#include "specact/invariants.hpp"

#include "specact/errors.hpp"

namespace specact {

namespace {
constexpr const char* kBasisNames[] = {"Vol", "B1", "B2", "B3", "B4", "B5"};
}

const char* basis_name(Basis b) { return kBasisNames[static_cast<int>(b)]; }

Basis basis_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (name == kBasisNames[i]) return static_cast<Basis>(i);
  throw MalformedInput("unknown invariant '" + name + "'");
}

InvariantPolynomial InvariantPolynomial::single(Basis b, const PiPoly& c) {
  InvariantPolynomial p;
  p.add(b, c);
  return p;
}

PiPoly InvariantPolynomial::coefficient(Basis b) const {
  auto it = coeffs_.find(b);
  return it == coeffs_.end() ? PiPoly() : it->second;
}

void InvariantPolynomial::add(Basis b, const PiPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(b);
  if (it == coeffs_.end()) {
    coeffs_.emplace(b, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) coeffs_.erase(it);
}

InvariantPolynomial& InvariantPolynomial::operator+=(const InvariantPolynomial& o) {
  for (const auto& [b, c] : o.coeffs_) add(b, c);
  return *this;
}

InvariantPolynomial operator-(const InvariantPolynomial& a, const InvariantPolynomial& b) {
  InvariantPolynomial r = a;
  for (const auto& [basis, c] : b.coeffs_) r.add(basis, -c);
  return r;
}

InvariantPolynomial operator*(const PiScaled& s, const InvariantPolynomial& p) {
  InvariantPolynomial r;
  for (const auto& [b, c] : p.coeffs_) r.add(b, s * c);
  return r;
}

InvariantPolynomial operator*(const Poly& s, const InvariantPolynomial& p) {
  InvariantPolynomial r;
  for (const auto& [b, c] : p.coeffs_) r.add(b, PiPoly(s * c.coeff, c.pi_power));
  return r;
}

InvariantPolynomial InvariantPolynomial::substitute(Var v, const Rat& value) const {
  InvariantPolynomial r;
  for (const auto& [b, c] : coeffs_) r.add(b, PiPoly(c.coeff.substitute(v, value), c.pi_power));
  return r;
}

std::string InvariantPolynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : coeffs_) {
    if (!out.empty()) out += " + ";
    out += "[" + to_string(c) + "] " + basis_name(b);
  }
  return out;
}

InvariantPolynomial eliminate_b3(const InvariantPolynomial& p) {
  InvariantPolynomial r;
  for (const auto& [b, c] : p.coeffs()) {
    if (b == Basis::B3)
      r.add(Basis::B4, -c);
    else
      r.add(b, c);
  }
  return r;
}

InvariantPolynomial reduce(const InvariantPolynomial& p) {
  InvariantPolynomial r;
  const InvariantPolynomial without_b3 = eliminate_b3(p);
  for (const auto& [b, c] : without_b3.coeffs()) {
    if (b == Basis::B4) {
      r.add(Basis::B2, PiScaled(Rat(-2), 0) * c);
      r.add(Basis::B5, PiScaled(Rat(-4), 0) * c);
    } else {
      r.add(b, c);
    }
  }
  return r;
}

}  // namespace specact
