#include "specact/spectral.hpp"

#include <cmath>

namespace specact {

namespace {

// exp(-z^2) * sum z^{2n+1} / (n! (2n+1)). Every term is positive, so this
// stays accurate well past the point where the alternating form loses digits.
double dawson_series(double z) {
  const double z2 = z * z;
  double term = z;  // z^{2n+1}/n!
  double sum = z;
  for (int n = 1; n < 2000; ++n) {
    term *= z2 / n;
    const double add = term / (2 * n + 1);
    sum += add;
    if (add < sum * 1e-17) break;
  }
  return std::exp(-z2) * sum;
}

// 1/(2z) sum (2n-1)!! / (2z^2)^n, truncated at the smallest term.
double dawson_asymptotic(double z) {
  const double x = 1.0 / (2.0 * z * z);
  double term = 1.0;
  double sum = 1.0;
  for (int n = 1; n < 200; ++n) {
    const double next = term * (2 * n - 1) * x;
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum / (2.0 * z);
}

}  // namespace

double dawson(double z) {
  if (z == 0.0) return 0.0;
  const double a = std::fabs(z);
  const double v = a < 8.0 ? dawson_series(a) : dawson_asymptotic(a);
  return z < 0 ? -v : v;
}

}  // namespace specact
