#pragma once

// Cutoff-function moments, the free-field form factor and its propagators.
//
// A cutoff function is either a finite Gaussian mixture f(x) = sum w_i
// exp(-s_i x^2), whose moments are exact rationals, or a bare table of the
// even-indexed coefficients f_k.

#include "specact/exactq.hpp"

#include <array>
#include <map>
#include <variant>
#include <vector>

namespace specact {

struct GaussianAtom {
  Rat weight;
  Rat scale;
};

struct GaussianMixture {
  std::vector<GaussianAtom> atoms;
};

/// Even index k -> f_k. Missing keys read as zero.
struct CoefficientTable {
  std::map<int, Rat> f;
};

class SpectralFunction {
 public:
  /// Throws MalformedInput on non-positive weights or scales, an empty
  /// mixture, odd table keys or a table without f_0.
  explicit SpectralFunction(GaussianMixture m);
  explicit SpectralFunction(CoefficientTable t);

  static SpectralFunction gaussian(const Rat& weight = Rat(1), const Rat& scale = Rat(1));

  bool is_mixture() const { return std::holds_alternative<GaussianMixture>(rep_); }
  const GaussianMixture& mixture() const;
  const CoefficientTable& table() const;

 private:
  std::variant<GaussianMixture, CoefficientTable> rep_;
};

enum class MomentConvention { MomentBased, DerivativeBased };

/// f_k = integral of t^{-k/2} dmu for positive k. Odd k has no exact value
/// (UnsupportedExact); use moment_fk_numeric.
Rat moment_fk(int k, const SpectralFunction& f);
double moment_fk_numeric(int k, const SpectralFunction& f);

/// f_{-2k} = integral of t^k dmu. The derivative route differentiates the
/// mixture exactly and divides by 2^k (2k-1)!!, which agrees with the moment
/// route.
Rat coeff_f_minus2k(int k, const SpectralFunction& f,
                    MomentConvention convention = MomentConvention::MomentBased);

/// (-1)^k f^{(2k)}(0) / (2k-1)!! without the 2^k; equals 2^k f_{-2k}.
Rat coeff_f_minus2k_unnormalized(int k, const SpectralFunction& f);

/// Exact f^{(n)}(0) of a Gaussian mixture.
Rat mixture_derivative_at_zero(int n, const GaussianMixture& m);

/// (k+1)! / (8 pi^2 (2k+3) (2k+1)!).
PiScaled ck(int k);
/// The same constant written as (k!/(2(2k+1)!) - (k+1)!/(2k+3)!) / 8 pi^2.
PiScaled ck_two_term(int k);

/// phi(x) = sum_{k<=K} a_k (x/Lambda^2)^k with a_k = (-1)^k f_{-2k} c_k.
struct FormFactor {
  int truncation = 0;
  std::vector<PiScaled> coeffs;  // all at pi^-2

  static FormFactor from(const SpectralFunction& f, int truncation);

  /// Exact value at rational x and Lambda^2.
  PiScaled evaluate(const Rat& x, const Rat& lambda2 = Rat(1)) const;
  double evaluate(double x, double lambda = 1.0) const;
};

PiScaled phi_lambda(const Rat& x, const SpectralFunction& f, int truncation,
                    const Rat& lambda2 = Rat(1));
double phi_lambda(double x, const SpectralFunction& f, int truncation, double lambda = 1.0);

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

struct PropagatorValue {
  Vec4 p{};
  double xi = 1.0;
  double phi = 0.0;  // phi(p^2)
  Mat4 matrix{};     // colour factor delta^{ab} implicit
};

/// [g - (1-xi) p p / p^2] / (p^2 phi(p^2)). DomainError for p = 0 or phi = 0.
PropagatorValue gauge_propagator(const Vec4& p, double xi, const SpectralFunction& f,
                                 int truncation, double lambda = 1.0);
/// 1 / (p^2 phi(p^2)).
double ghost_propagator(const Vec4& p, const SpectralFunction& f, int truncation,
                        double lambda = 1.0);
/// Momentum-space kernel of the gauge-fixed quadratic action,
/// p^2 phi (g - (1 - 1/xi) p p / p^2). DomainError for xi = 0.
Mat4 gauge_kernel(const Vec4& p, double xi, const SpectralFunction& f, int truncation,
                  double lambda = 1.0);

struct Tadpole {
  PiScaled coefficient;      // of the integral of tr d_mu A^mu
  bool traceless_vanishes;   // the integrand is a trace of a traceless field
};

/// f_2 Lambda^2 / (4 pi^2).
Tadpole tadpole_coefficient(const SpectralFunction& f, const Rat& lambda2 = Rat(1));

/// Dawson's integral F(z) = exp(-z^2) int_0^z exp(t^2) dt.
double dawson(double z);

/// Resummed form factor for a Gaussian mixture. DomainError for x <= 0.
double phi_closed(double x, const SpectralFunction& f, double lambda = 1.0);

/// Relative residual of the product identity of two flat heat kernels.
double heat_kernel_product_check(double s, double t, const Vec4& x, const Vec4& y);

}  // namespace specact
