#include "nep/kernel.hpp"

#include <cmath>

#include "nep/errors.hpp"
#include "nep/quadrature.hpp"

namespace nep {

namespace {

void check_angle(double t, const char* name) {
  if (!(t >= -1e-12 && t <= M_PI + 1e-12))
    throw OutOfRange(std::string(name) + " outside [0, pi]");
}

/// int_0^pi (A - B cos(phi))^{-p} sin^{n-3}(phi) dphi with A >= B >= 0.
/// The integrand is analytic; its only near-singularity is at phi = 0 when
/// A/B -> 1.  A single fixed rule converges geometrically once A/B is
/// bounded away from 1, otherwise we hand the endpoint peak to the adaptive
/// integrator.
double cos_power_integral(double A, double B, double p, int n,
                          const KernelConfig& cfg) {
  const int sp = n - 3;
  auto f = [&](double phi) {
    return std::pow(A - B * std::cos(phi), -p) *
           (sp == 0 ? 1.0 : std::pow(std::sin(phi), sp));
  };
  if (B <= 1e-14 * A || A >= 1.05 * B)
    return integrate_fixed(f, 0.0, M_PI, cfg.quad_order);
  QuadOptions opt;
  opt.rel_tol = cfg.quad_tol;
  opt.throw_on_failure = true;
  return integrate(f, 0.0, M_PI, opt);
}

}  // namespace

void KernelConfig::validate() const {
  if (n < 3) throw OutOfRange("KernelConfig: n >= 3 required");
  if (quad_order < 16) throw OutOfRange("KernelConfig: quad_order >= 16");
  if (!(series_tol > 0 && series_tol < 1e-4))
    throw OutOfRange("KernelConfig: series_tol in (0, 1e-4)");
  if (max_terms < 8) throw OutOfRange("KernelConfig: max_terms >= 8");
}

double cos_between(double theta, double theta1, double phi) {
  check_angle(theta, "theta");
  check_angle(theta1, "theta1");
  check_angle(phi, "phi");
  return std::cos(theta) * std::cos(theta1) +
         std::cos(phi) * std::sin(theta) * std::sin(theta1);
}

double ring_kernel(double r, double theta, double theta1,
                   const KernelConfig& cfg) {
  check_angle(theta, "theta");
  check_angle(theta1, "theta1");
  if (r < 0) throw OutOfRange("ring_kernel: r >= 0 required");
  if (r == 0.0) return sin_power_integral(cfg.n - 3);
  if (std::abs(r - 1.0) < 1e-12 && std::abs(theta - theta1) < cfg.exclusion)
    throw SingularPoint("ring_kernel: on-sphere diagonal");
  const double A = 1.0 + r * r - 2.0 * r * std::cos(theta) * std::cos(theta1);
  const double B = 2.0 * r * std::sin(theta) * std::sin(theta1);
  return cos_power_integral(A, B, 0.5 * cfg.n - 1.0, cfg.n, cfg);
}

double ring_kernel_closed_n4(double r, double theta, double theta1) {
  const double A = 1.0 + r * r - 2.0 * r * std::cos(theta) * std::cos(theta1);
  const double B = 2.0 * r * std::sin(theta) * std::sin(theta1);
  const double x = B / A;
  if (x < 1e-4) {
    // (1/B) log((1+x)/(1-x)) = (2/A)(1 + x^2/3 + x^4/5 + ...)
    return (2.0 / A) * (1.0 + x * x / 3.0 + x * x * x * x / 5.0);
  }
  return std::log((A + B) / (A - B)) / B;
}

double ring_kernel_dtheta(double theta, double theta1,
                          const KernelConfig& cfg) {
  check_angle(theta1, "theta1");
  if (!(theta > 0.0 && theta < M_PI))
    throw SingularPoint("ring_kernel_dtheta: theta at a pole");
  if (std::abs(theta - theta1) < cfg.exclusion)
    throw SingularPoint("ring_kernel_dtheta: on-sphere diagonal");
  const int n = cfg.n;
  const double h = ring_kernel(1.0, theta, theta1, cfg);
  const double b = 1.0 - std::cos(theta) * std::cos(theta1);
  const double a = std::sin(theta) * std::sin(theta1);
  const double F = cos_power_integral(b, a, 0.5 * n, n, cfg);
  return -(0.5 * n - 1.0) * (std::cos(theta) / std::sin(theta)) * h +
         (n - 2.0) * std::pow(2.0, -0.5 * n) *
             (std::cos(theta) - std::cos(theta1)) / std::sin(theta) * F;
}

double ring_kernel_dtheta1(double theta, double theta1,
                           const KernelConfig& cfg) {
  return ring_kernel_dtheta(theta1, theta, cfg);
}

double antipode_slope(double theta, int n) {
  if (!(theta > 0.0 && theta < M_PI))
    throw OutOfRange("antipode_slope: theta in (0, pi)");
  const double u = 1.0 + std::cos(theta);
  const double lg = std::log(std::sin(theta)) - 0.5 * n * std::log(u);
  if (lg > 700.0) throw OutOfRange("antipode_slope: overflow near theta = pi");
  return (0.5 * n - 1.0) * std::exp(lg);
}

double antipode_slope_scale(int n) {
  return std::pow(2.0, 1.0 - 0.5 * n) * sin_power_integral(n - 3);
}

SeriesABC series_abc(double a, double b, const KernelConfig& cfg) {
  if (!(a >= 0.0 && a < b && b <= 2.0))
    throw OutOfRange("series_abc: requires 0 <= a < b <= 2");
  if (a / b > cfg.ratio_guard)
    throw SlowConvergence("series_abc: a/b beyond the convergence guard");
  const double x = (a / b) * (a / b);
  const double g0 = series_gamma_factor(cfg.n);
  const double lam[3] = {0.5 * cfg.n - 1.0, 0.5 * cfg.n, 0.5 * cfg.n + 1.0};
  double term[3] = {g0, g0, g0};
  double sum[3] = {g0, g0, g0};
  SeriesABC out;
  out.terms = 1;
  if (x == 0.0) {
    out.A = sum[0];
    out.B = sum[1];
    out.C = sum[2];
    return out;
  }
  for (int l = 0;; ++l) {
    bool converged = true;
    for (int j = 0; j < 3; ++j) {
      const double ratio = (lam[j] + 2 * l) * (lam[j] + 2 * l + 1) *
                           (l + 0.5) /
                           ((2.0 * l + 1) * (2.0 * l + 2) *
                            (0.5 * cfg.n + l - 0.5)) *
                           x;
      term[j] *= ratio;
      sum[j] += term[j];
      if (term[j] > cfg.series_tol * sum[j]) converged = false;
    }
    ++out.terms;
    if (converged) break;
    if (out.terms >= cfg.max_terms)
      throw SlowConvergence("series_abc: term budget exhausted");
  }
  out.A = sum[0];
  out.B = sum[1];
  out.C = sum[2];
  return out;
}

double mixed_core(double theta, double theta1, const KernelConfig& cfg) {
  if (!(theta > 0.0 && theta < M_PI && theta1 > 0.0 && theta1 < M_PI))
    throw OutOfRange("mixed_core: angles in (0, pi)");
  if (theta == theta1) throw OutOfRange("mixed_core: diagonal excluded");
  const double a = std::sin(theta) * std::sin(theta1);
  const double b = 1.0 - std::cos(theta) * std::cos(theta1);
  const SeriesABC s = series_abc(a, b, cfg);
  const double m = 0.5 * cfg.n;
  const double num = b * (m - 1.0) * (s.B - s.A) + (m - 1.0) * (s.A - s.C) +
                     (s.B - s.C) - (m - 1.0) * (a * a / b) * s.B +
                     m * (a * a / (b * b)) * s.C;
  return num / series_gamma_factor(cfg.n);
}

double kernel_mixed_partial(double theta, double theta1,
                            const KernelConfig& cfg) {
  const double b = 1.0 - std::cos(theta) * std::cos(theta1);
  const double pref = (0.5 * cfg.n - 1.0) *
                      std::pow(2.0 * b, 1.0 - 0.5 * cfg.n) /
                      (std::sin(theta) * std::sin(theta1));
  return pref * series_gamma_factor(cfg.n) * mixed_core(theta, theta1, cfg);
}

TermPair term_pair(int l, int m, double a, double b) {
  if (m < 2) throw OutOfRange("term_pair: m >= 2 (n = 2m >= 4)");
  if (l < 0) throw OutOfRange("term_pair: l >= 0");
  double coeff = 1.0;
  for (int k = 0; k < l; ++k) coeff *= term_coeff_ratio(k, m);
  const double xl = std::pow(a / b, 2 * l);
  TermPair out;
  out.coeff = coeff;
  if (l == 0) {
    out.t1 = 0.0;  // bracket vanishes at l = 0
  } else {
    const double bracket = 2.0 * l * b - 4.0 * l -
                           (2.0 * l / double(m)) * (2.0 * l - 1.0) -
                           2.0 * l * (m + 2.0 * l - 1.0) / (m * (m - 1.0));
    out.t1 = bracket * coeff * xl;
  }
  out.t2 = (-(a * a / b) * (m + 2.0 * l - 1.0) +
            (m + 2.0 * l - 1.0) * (m + 2.0 * l) / (m - 1.0) *
                (a * a / (b * b))) *
           coeff * xl;
  return out;
}

double term_coeff_ratio(int l, int m) {
  return (m + 2.0 * l) * (m + 2.0 * l - 1.0) /
         (4.0 * (l + 1.0) * (m + l - 0.5));
}

double term_partial_sum(int l, int m, double a, double b) {
  double s = 0.0;
  double coeff = 1.0;
  const double x = (a / b) * (a / b);
  double xl = 1.0;
  for (int k = 0; k <= l; ++k) {
    if (k > 0) {
      const double bracket = 2.0 * k * b - 4.0 * k -
                             (2.0 * k / double(m)) * (2.0 * k - 1.0) -
                             2.0 * k * (m + 2.0 * k - 1.0) / (m * (m - 1.0));
      s += bracket * coeff * xl;
    }
    if (k <= l - 1) {
      s += (-(a * a / b) * (m + 2.0 * k - 1.0) +
            (m + 2.0 * k - 1.0) * (m + 2.0 * k) / (m - 1.0) *
                (a * a / (b * b))) *
           coeff * xl;
    }
    coeff *= term_coeff_ratio(k, m);
    xl *= x;
  }
  return s;
}

}  // namespace nep
