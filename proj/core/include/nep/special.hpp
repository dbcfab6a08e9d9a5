#ifndef NEP_SPECIAL_HPP
#define NEP_SPECIAL_HPP

namespace nep {

/// exp(lgamma(x) - lgamma(y)), evaluated in log space so that large arguments
/// do not overflow.
double gamma_ratio(double x, double y);

/// Pochhammer symbol (x)_k for integer k >= 0, via log-gamma accumulation.
double pochhammer(double x, int k);

/// \int_0^pi sin^p(t) dt for integer p >= 0 (closed form via gamma).
double sin_power_integral(int p);

/// Normalizing constant of the ring kernel: 1 / \int_0^pi sin^{n-3} dphi.
/// Examples: n=3 -> 1/pi, n=4 -> 1/2, n=5 -> 2/pi.
double ring_kernel_norm(int n);

/// Gamma(n/2-1) Gamma(1/2) / Gamma(n/2-1/2): the l=0 coefficient shared by
/// the three kernel series, and the normalizer between the series sign
/// quantity and the true mixed partial.
double series_gamma_factor(int n);

/// Surface measure of the unit sphere S^{n-1} in R^n.
double sphere_area(int n);

}  // namespace nep

#endif  // NEP_SPECIAL_HPP
