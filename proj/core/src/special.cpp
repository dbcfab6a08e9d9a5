#include "nep/special.hpp"

#include <cmath>

#include "nep/errors.hpp"

namespace nep {

double gamma_ratio(double x, double y) {
  return std::exp(std::lgamma(x) - std::lgamma(y));
}

double pochhammer(double x, int k) {
  if (k == 0) return 1.0;
  // For positive x stay in log space; x <= 0 would need sign tracking but
  // never occurs here (lambda = n/2 - 1 >= 1/2 for n >= 3).
  return std::exp(std::lgamma(x + k) - std::lgamma(x));
}

double sin_power_integral(int p) {
  if (p < 0) throw OutOfRange("sin_power_integral: negative exponent");
  // \int_0^pi sin^p = sqrt(pi) Gamma((p+1)/2) / Gamma(p/2 + 1)
  return std::sqrt(M_PI) *
         std::exp(std::lgamma(0.5 * (p + 1)) - std::lgamma(0.5 * p + 1.0));
}

double ring_kernel_norm(int n) {
  if (n < 3) throw OutOfRange("ring_kernel_norm: requires n >= 3");
  return 1.0 / sin_power_integral(n - 3);
}

double series_gamma_factor(int n) {
  if (n < 3) throw OutOfRange("series_gamma_factor: requires n >= 3");
  return std::exp(std::lgamma(0.5 * n - 1.0) + std::lgamma(0.5) -
                  std::lgamma(0.5 * n - 0.5));
}

double sphere_area(int n) {
  return 2.0 * std::pow(M_PI, 0.5 * n) / std::exp(std::lgamma(0.5 * n));
}

}  // namespace nep
