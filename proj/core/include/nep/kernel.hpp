#ifndef NEP_KERNEL_HPP
#define NEP_KERNEL_HPP

#include "nep/special.hpp"

namespace nep {

/// Configuration for kernel quadrature and series evaluation.  Immutable in
/// use; all kernel operations are pure functions of their inputs and a config.
struct KernelConfig {
  int n = 3;                 ///< dimension, >= 3
  int quad_order = 64;       ///< fixed-order node count for smooth integrands
  double series_tol = 1e-12; ///< relative truncation tolerance, < 1e-4
  int max_terms = 200;       ///< series length cap
  double exclusion = 1e-3;   ///< diagonal exclusion radius at r = 1 (radians)
  double ratio_guard = 0.999;///< reject series arguments with a/b above this
  double quad_tol = 1e-13;   ///< adaptive quadrature relative tolerance

  void validate() const;
};

/// Cosine of the angle between sphere points at colatitudes theta, theta1
/// whose azimuthal separation is phi.
double cos_between(double theta, double theta1, double phi);

/// The axisymmetric ring kernel
///   h(r, theta, theta1) = int_0^pi (1 + r^2 - 2 r psi)^{1-n/2} sin^{n-3}(phi) dphi,
/// the azimuthal average (up to normalization) of the Riesz kernel over the
/// latitude circle at theta1, seen from the point (r, theta).
double ring_kernel(double r, double theta, double theta1,
                   const KernelConfig& cfg);

/// Closed form of the n = 4 ring kernel:
///   (1/B) log((A+B)/(A-B)), A = 1 + r^2 - 2 r cos(theta) cos(theta1),
///   B = 2 r sin(theta) sin(theta1).
double ring_kernel_closed_n4(double r, double theta, double theta1);

/// d/dtheta of the ring kernel on the sphere (r = 1),
///   -(n/2-1) cot(theta) h(1,theta,theta1)
///   + (n-2) 2^{-n/2} (cos(theta)-cos(theta1))/sin(theta) * int f dphi,
/// with f = (1 - psi)^{-n/2} sin^{n-3}(phi).
double ring_kernel_dtheta(double theta, double theta1,
                          const KernelConfig& cfg);

/// d/dtheta1 of the ring kernel at r = 1 (by symmetry of h in its angles).
double ring_kernel_dtheta1(double theta, double theta1,
                           const KernelConfig& cfg);

/// Normalized slope of the kernel in its second angle when the first angle
/// sits at the antipode:  (n/2 - 1) sin(theta) (1 + cos(theta))^{-n/2}.
/// The unnormalized derivative d/dtheta1 h(1, pi, theta1)|_{theta1=theta}
/// equals this value times antipode_slope_scale(n).
double antipode_slope(double theta, int n);

/// 2^{1-n/2} * int_0^pi sin^{n-3} dphi, the factor relating antipode_slope to
/// the raw kernel derivative.
double antipode_slope_scale(int n);

/// The three Gegenbauer-type series of the mixed-partial calculation,
///   S(lambda) = sum_l (lambda)_{2l} G(n/2-1) G(l+1/2) / ((2l)! G(n/2+l-1/2)) (a/b)^{2l}
/// for lambda = n/2-1 (A), n/2 (B), n/2+1 (C).  Each equals
/// b^{power} * int_0^pi (1-psi)^{-power'} sin^{n-3} dphi with
/// 1 - psi = b - a cos(phi).
struct SeriesABC {
  double A = 0, B = 0, C = 0;
  int terms = 0;
};
SeriesABC series_abc(double a, double b, const KernelConfig& cfg);

/// The sign quantity D of the mixed-partial identity: combining the series,
///   D = [ b(n/2-1)(B-A) + (n/2-1)(A-C) + (B-C)
///         - (n/2-1)(a^2/b) B + (n/2)(a^2/b^2) C ] / series_gamma_factor(n).
/// The mixed partial d2h/dtheta dtheta1 (1,...) is negative iff D is.
double mixed_core(double theta, double theta1, const KernelConfig& cfg);

/// d2h/(dtheta dtheta1)(1, theta, theta1) reconstructed from mixed_core:
///   (n/2-1) (2b)^{1-n/2} / (sin(theta) sin(theta1)) * gamma_factor * D.
double kernel_mixed_partial(double theta, double theta1,
                            const KernelConfig& cfg);

/// One pair of bracketed terms in the even-dimension (n = 2m) regrouping of
/// the D series; t1 is zero at l = 0 and the normalized leading coefficient
/// is coeff (A_l with A_0 = 1).
struct TermPair {
  double t1 = 0, t2 = 0;
  double coeff = 0;
};
TermPair term_pair(int l, int m, double a, double b);

/// Ratio coeff(l+1)/coeff(l) = (m+2l)(m+2l-1) / (4(l+1)(m+l-1/2)).
double term_coeff_ratio(int l, int m);

/// Partial sum  sum_{k<=l} t1_k + sum_{k<=l-1} t2_k, nonpositive for l >= 1.
double term_partial_sum(int l, int m, double a, double b);

}  // namespace nep

#endif  // NEP_KERNEL_HPP
