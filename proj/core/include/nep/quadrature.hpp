#ifndef NEP_QUADRATURE_HPP
#define NEP_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <queue>
#include <vector>

#include "nep/errors.hpp"

namespace nep {

/// Nodes and weights of a Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;
};

/// Returns the N-point Gauss-Legendre rule (computed once, then cached).
const GaussRule& gauss_legendre(int n);

struct QuadOptions {
  double rel_tol = 1e-13;
  /// Scale below which absolute error is considered converged even if the
  /// relative target is not met (guards integrals whose value is ~0).
  double abs_floor = 1e-300;
  /// Panels are never split below (b-a) * 2^-max_depth.
  int max_depth = 46;
  int max_panels = 20000;
  /// Points forced to be initial panel boundaries (known kinks/singularities).
  std::vector<double> split_at;
  /// Nodes per panel for the fine rule; the coarse companion uses half.
  int panel_order = 16;
  /// Throw Divergent instead of returning the best estimate on budget
  /// exhaustion with a large remaining error.
  bool throw_on_failure = false;
};

/// An assembled composite quadrature: global nodes, weights and the cached
/// integrand values at the nodes.  sum_i w[i]*fx[i] reproduces the accepted
/// estimate; other integrands sharing the same singular structure can be
/// integrated by re-weighting fx.
struct PanelRule {
  std::vector<double> x;
  std::vector<double> w;
  std::vector<double> fx;

  double value() const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * fx[i];
    return s;
  }
};

namespace detail {

struct Panel {
  double a, b;
  double fine;   // fine-rule estimate
  double err;    // |fine - coarse|
  int depth;
};

struct PanelWorse {
  bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

template <class F>
Panel make_panel(F& f, double a, double b, int depth, const GaussRule& fine,
                 const GaussRule& coarse) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double sf = 0.0, sc = 0.0;
  for (std::size_t i = 0; i < fine.x.size(); ++i)
    sf += fine.w[i] * f(mid + half * fine.x[i]);
  for (std::size_t i = 0; i < coarse.x.size(); ++i)
    sc += coarse.w[i] * f(mid + half * coarse.x[i]);
  sf *= half;
  sc *= half;
  return Panel{a, b, sf, std::abs(sf - sc), depth};
}

template <class F>
double adapt(F& f, double a, double b, const QuadOptions& opt,
             std::vector<Panel>* keep) {
  const GaussRule& fine = gauss_legendre(opt.panel_order);
  const GaussRule& coarse = gauss_legendre(std::max(2, opt.panel_order / 2));

  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : opt.split_at)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
  std::vector<Panel> done;  // panels accepted at max depth
  double total = 0.0, total_err = 0.0, abs_sum = 0.0;

  auto push = [&](const Panel& p) {
    total += p.fine;
    total_err += p.err;
    abs_sum += std::abs(p.fine);
    if (p.depth >= opt.max_depth) {
      done.push_back(p);
    } else {
      active.push(p);
    }
  };

  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    push(make_panel(f, cuts[i], cuts[i + 1], 0, fine, coarse));

  int n_panels = static_cast<int>(cuts.size()) - 1;
  while (!active.empty() && n_panels < opt.max_panels) {
    const double target =
        std::max(opt.rel_tol * std::max(std::abs(total), 1e-3 * abs_sum),
                 opt.abs_floor);
    if (total_err <= target) break;
    Panel worst = active.top();
    // All remaining refinable error already below target: stop.
    if (worst.err <= target / std::max(1, n_panels) && total_err <= 4 * target)
      break;
    active.pop();
    total -= worst.fine;
    total_err -= worst.err;
    abs_sum -= std::abs(worst.fine);
    const double mid = 0.5 * (worst.a + worst.b);
    push(make_panel(f, worst.a, mid, worst.depth + 1, fine, coarse));
    push(make_panel(f, mid, worst.b, worst.depth + 1, fine, coarse));
    ++n_panels;
  }

  if (opt.throw_on_failure) {
    const double target =
        std::max(opt.rel_tol * std::max(std::abs(total), 1e-3 * abs_sum),
                 opt.abs_floor);
    if (total_err > 1e3 * target)
      throw Divergent("adaptive quadrature failed to converge");
  }

  if (keep) {
    keep->clear();
    keep->reserve(done.size() + active.size());
    for (const Panel& p : done) keep->push_back(p);
    while (!active.empty()) {
      keep->push_back(active.top());
      active.pop();
    }
    std::sort(keep->begin(), keep->end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
  }
  return total;
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre integration of f over [a, b].
template <class F>
double integrate(F&& f, double a, double b, const QuadOptions& opt = {}) {
  if (!(b > a)) return 0.0;
  return detail::adapt(f, a, b, opt, nullptr);
}

/// Adaptive integration that additionally returns the accepted composite rule
/// with cached integrand values.
template <class F>
PanelRule build_panels(F&& f, double a, double b, const QuadOptions& opt = {}) {
  PanelRule rule;
  if (!(b > a)) return rule;
  std::vector<detail::Panel> panels;
  detail::adapt(f, a, b, opt, &panels);
  const GaussRule& fine = gauss_legendre(opt.panel_order);
  rule.x.reserve(panels.size() * fine.x.size());
  rule.w.reserve(panels.size() * fine.x.size());
  for (const auto& p : panels) {
    const double mid = 0.5 * (p.a + p.b), half = 0.5 * (p.b - p.a);
    for (std::size_t i = 0; i < fine.x.size(); ++i) {
      rule.x.push_back(mid + half * fine.x[i]);
      rule.w.push_back(half * fine.w[i]);
    }
  }
  rule.fx.resize(rule.x.size());
  for (std::size_t i = 0; i < rule.x.size(); ++i) rule.fx[i] = f(rule.x[i]);
  return rule;
}

/// Fixed-order Gauss-Legendre estimate on [a, b] (no adaptivity).
template <class F>
double integrate_fixed(F&& f, double a, double b, int order) {
  const GaussRule& g = gauss_legendre(order);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < g.x.size(); ++i)
    s += g.w[i] * f(mid + half * g.x[i]);
  return s * half;
}

}  // namespace nep

#endif  // NEP_QUADRATURE_HPP
