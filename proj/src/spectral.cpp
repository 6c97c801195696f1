#include "specact/spectral.hpp"

#include "specact/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace specact {

SpectralFunction::SpectralFunction(GaussianMixture m) : rep_(std::move(m)) {
  const auto& atoms = std::get<GaussianMixture>(rep_).atoms;
  if (atoms.empty()) throw MalformedInput("gaussian mixture: no terms");
  for (const auto& a : atoms) {
    if (a.weight.sign() <= 0) throw MalformedInput("gaussian mixture: weight must be positive");
    if (a.scale.sign() <= 0) throw MalformedInput("gaussian mixture: scale must be positive");
  }
}

SpectralFunction::SpectralFunction(CoefficientTable t) : rep_(std::move(t)) {
  const auto& f = std::get<CoefficientTable>(rep_).f;
  for (const auto& [k, v] : f)
    if (k % 2 != 0) throw MalformedInput("coefficient table: key " + std::to_string(k) + " is odd");
  if (!f.count(0)) throw MalformedInput("coefficient table: f_0 missing");
}

SpectralFunction SpectralFunction::gaussian(const Rat& weight, const Rat& scale) {
  return SpectralFunction(GaussianMixture{{{weight, scale}}});
}

const GaussianMixture& SpectralFunction::mixture() const {
  if (!is_mixture()) throw UnsupportedExact("spectral function is not a gaussian mixture");
  return std::get<GaussianMixture>(rep_);
}

const CoefficientTable& SpectralFunction::table() const {
  if (is_mixture()) throw UnsupportedExact("spectral function is not a coefficient table");
  return std::get<CoefficientTable>(rep_);
}

namespace {

Rat table_lookup(const CoefficientTable& t, int key) {
  auto it = t.f.find(key);
  return it == t.f.end() ? Rat(0) : it->second;
}

}  // namespace

Rat moment_fk(int k, const SpectralFunction& f) {
  if (k <= 0) throw std::invalid_argument("moment_fk: k must be positive");
  if (!f.is_mixture()) {
    if (k % 2) throw UnsupportedExact("moment_fk: odd k is not representable in a coefficient table");
    return table_lookup(f.table(), k);
  }
  if (k % 2) throw UnsupportedExact("moment_fk: odd k needs half-integer powers of the scale");
  Rat sum;
  for (const auto& a : f.mixture().atoms) sum += a.weight * a.scale.pow(-k / 2);
  return sum;
}

double moment_fk_numeric(int k, const SpectralFunction& f) {
  if (k <= 0) throw std::invalid_argument("moment_fk_numeric: k must be positive");
  if (!f.is_mixture()) return table_lookup(f.table(), k).to_double();
  double sum = 0;
  for (const auto& a : f.mixture().atoms)
    sum += a.weight.to_double() * std::pow(a.scale.to_double(), -0.5 * k);
  return sum;
}

Rat mixture_derivative_at_zero(int n, const GaussianMixture& m) {
  if (n < 0) throw std::invalid_argument("derivative order must be non-negative");
  Rat total;
  for (const auto& atom : m.atoms) {
    // d/dx [P(x) e^{-s x^2}] = (P' - 2 s x P) e^{-s x^2}; P as dense coefficients.
    std::vector<Rat> poly{Rat(1)};
    for (int step = 0; step < n; ++step) {
      std::vector<Rat> next(poly.size() + 1);
      for (std::size_t i = 1; i < poly.size(); ++i) next[i - 1] += Rat(static_cast<long>(i)) * poly[i];
      for (std::size_t i = 0; i < poly.size(); ++i) next[i + 1] -= Rat(2) * atom.scale * poly[i];
      poly = std::move(next);
    }
    total += atom.weight * poly[0];
  }
  return total;
}

Rat coeff_f_minus2k(int k, const SpectralFunction& f, MomentConvention convention) {
  if (k < 0) throw std::invalid_argument("coeff_f_minus2k: k must be non-negative");
  if (!f.is_mixture()) return table_lookup(f.table(), -2 * k);
  if (convention == MomentConvention::MomentBased) {
    Rat sum;
    for (const auto& a : f.mixture().atoms) sum += a.weight * a.scale.pow(k);
    return sum;
  }
  return coeff_f_minus2k_unnormalized(k, f) / Rat(BigInt(BigInt(1) << k));
}

Rat coeff_f_minus2k_unnormalized(int k, const SpectralFunction& f) {
  if (k < 0) throw std::invalid_argument("coeff_f_minus2k: k must be non-negative");
  Rat d = mixture_derivative_at_zero(2 * k, f.mixture());
  if (k % 2) d = -d;
  return d / Rat(double_factorial(2 * k - 1));
}

PiScaled ck(int k) {
  if (k < 0) throw std::invalid_argument("ck: k must be non-negative");
  Rat v(factorial(k + 1), BigInt(BigInt(2 * k + 3) * factorial(2 * k + 1)));
  return PiScaled(v / Rat(8), -2);
}

PiScaled ck_two_term(int k) {
  if (k < 0) throw std::invalid_argument("ck: k must be non-negative");
  Rat v = Rat(factorial(k), BigInt(2 * factorial(2 * k + 1))) - Rat(factorial(k + 1), factorial(2 * k + 3));
  return PiScaled(v / Rat(8), -2);
}

FormFactor FormFactor::from(const SpectralFunction& f, int truncation) {
  if (truncation < 0) throw std::invalid_argument("form factor: truncation must be non-negative");
  FormFactor ff;
  ff.truncation = truncation;
  for (int k = 0; k <= truncation; ++k) {
    Rat a = coeff_f_minus2k(k, f);
    if (k % 2) a = -a;
    ff.coeffs.push_back(a * ck(k));
  }
  return ff;
}

PiScaled FormFactor::evaluate(const Rat& x, const Rat& lambda2) const {
  if (lambda2.sign() <= 0) throw DomainError("form factor: Lambda^2 must be positive");
  const Rat u = x / lambda2;
  PiScaled sum;
  Rat upow(1);
  for (const auto& a : coeffs) {
    sum = sum + upow * a;
    upow *= u;
  }
  return sum;
}

double FormFactor::evaluate(double x, double lambda) const {
  if (!(lambda > 0)) throw DomainError("form factor: Lambda must be positive");
  const double u = x / (lambda * lambda);
  // Horner on the rational coefficients, then the common pi^-2.
  double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + it->coeff.to_double();
  return acc / (std::numbers::pi * std::numbers::pi);
}

PiScaled phi_lambda(const Rat& x, const SpectralFunction& f, int truncation, const Rat& lambda2) {
  return FormFactor::from(f, truncation).evaluate(x, lambda2);
}

double phi_lambda(double x, const SpectralFunction& f, int truncation, double lambda) {
  return FormFactor::from(f, truncation).evaluate(x, lambda);
}

namespace {

double norm2(const Vec4& p) {
  double s = 0;
  for (double c : p) s += c * c;
  return s;
}

double checked_phi(const Vec4& p, const SpectralFunction& f, int truncation, double lambda) {
  const double p2 = norm2(p);
  if (p2 == 0.0) throw DomainError("propagator: zero momentum is singular");
  const FormFactor ff = FormFactor::from(f, truncation);
  const double phi = ff.evaluate(p2, lambda);
  // A value lost in the rounding of the cancelling terms counts as a zero.
  const double u = p2 / (lambda * lambda);
  double magnitude = 0, upow = 1;
  for (const auto& a : ff.coeffs) {
    magnitude += std::fabs(a.coeff.to_double()) * upow;
    upow *= u;
  }
  magnitude /= std::numbers::pi * std::numbers::pi;
  if (std::fabs(phi) <= 64 * std::numeric_limits<double>::epsilon() * magnitude)
    throw DomainError("propagator: form factor vanishes, quadratic form not invertible");
  return phi;
}

}  // namespace

PropagatorValue gauge_propagator(const Vec4& p, double xi, const SpectralFunction& f,
                                 int truncation, double lambda) {
  PropagatorValue out;
  out.p = p;
  out.xi = xi;
  out.phi = checked_phi(p, f, truncation, lambda);
  const double p2 = norm2(p);
  const double scale = 1.0 / (p2 * out.phi);
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      out.matrix[m][n] = scale * ((m == n ? 1.0 : 0.0) - (1.0 - xi) * p[m] * p[n] / p2);
  return out;
}

double ghost_propagator(const Vec4& p, const SpectralFunction& f, int truncation, double lambda) {
  const double phi = checked_phi(p, f, truncation, lambda);
  return 1.0 / (norm2(p) * phi);
}

Mat4 gauge_kernel(const Vec4& p, double xi, const SpectralFunction& f, int truncation,
                  double lambda) {
  if (xi == 0.0) throw DomainError("gauge kernel: xi = 0 has no quadratic form");
  const double phi = checked_phi(p, f, truncation, lambda);
  const double p2 = norm2(p);
  Mat4 k{};
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n)
      k[m][n] = p2 * phi * ((m == n ? 1.0 : 0.0) - (1.0 - 1.0 / xi) * p[m] * p[n] / p2);
  return k;
}

Tadpole tadpole_coefficient(const SpectralFunction& f, const Rat& lambda2) {
  const Rat f2 = moment_fk(2, f);
  return {PiScaled(f2 * lambda2 / Rat(4), -2), true};
}

double phi_closed(double x, const SpectralFunction& f, double lambda) {
  if (!(x > 0)) throw DomainError("phi_closed: x must be positive");
  double sum = 0;
  for (const auto& a : f.mixture().atoms) {
    const double u = a.scale.to_double() * x / (lambda * lambda);
    const double r = std::sqrt(u);
    sum += a.weight.to_double() * ((1.0 / r + 2.0 / (u * r)) * dawson(r / 2.0) - 1.0 / u);
  }
  return sum / (8.0 * std::numbers::pi * std::numbers::pi);
}

double heat_kernel_product_check(double s, double t, const Vec4& x, const Vec4& y) {
  if (!(s > 0 && s < 1)) throw DomainError("heat kernel product: s must lie in (0,1)");
  if (!(t > 0)) throw DomainError("heat kernel product: t must be positive");
  auto kernel = [](double time, double d2) {
    const double c = 4.0 * std::numbers::pi * time;
    return std::exp(-d2 / (4.0 * time)) / (c * c);
  };
  Vec4 d;
  for (int i = 0; i < 4; ++i) d[i] = x[i] - y[i];
  const double d2 = norm2(d);
  const double lhs = kernel(s * t, d2) * kernel((1 - s) * t, d2);
  const double c = 4.0 * std::numbers::pi * t;
  const double rhs = kernel(s * (1 - s) * t, d2) / (c * c);
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  return scale == 0.0 ? 0.0 : std::fabs(lhs - rhs) / scale;
}

}  // namespace specact
