#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <vector>

namespace kerrsim::numeric {

/// Controls for adaptive Simpson integration.
///
/// The interval is first split into `base_panels` equal panels so that narrow
/// features of the integrand are not stepped over; each panel is then refined
/// by step halving until the Richardson difference between successive levels
/// falls below its share of the global tolerance.
struct QuadratureOptions {
  double rel_tol = 1e-6;
  double abs_tol = 0.0;
  int base_panels = 16;
  int max_depth = 30;
  // Refinement stops, unconverged, once this many evaluations are spent.
  std::size_t max_evaluations = 50'000'000;

  bool operator==(const QuadratureOptions&) const = default;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;  // sum of |S2 - S1| / 15 over accepted panels
  std::size_t evaluations = 0;
  int deepest_level = 0;
  bool converged = true;
};

/// One-line human-readable diagnostics, used in error messages and manifests.
std::string describe(const QuadratureResult& result);

namespace detail {

template <class F>
class SimpsonRefiner {
 public:
  SimpsonRefiner(F& f, int max_depth, std::size_t max_evaluations, QuadratureResult& out)
      : f_(f), max_depth_(max_depth), max_evaluations_(max_evaluations), out_(out) {}

  // `h` is carried down as exact halves rather than recomputed as b - a:
  // deep in the recursion b - a carries a relative rounding error of
  // ulp(a) / h, which would put a floor of ~ulp(a) * f under |S2 - S1|.
  double refine(double a, double b, double h, double fa, double fm, double fb, double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f_(lm);
    const double frm = f_(rm);
    out_.evaluations += 2;
    if (depth > out_.deepest_level) out_.deepest_level = depth;

    const double left = h / 12.0 * (fa + 4.0 * flm + fm);
    const double right = h / 12.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;

    if (std::abs(delta) <= 15.0 * eps) {
      out_.error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth >= max_depth_ || out_.evaluations >= max_evaluations_) {
      out_.converged = false;
      out_.error_estimate += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    return refine(a, m, 0.5 * h, fa, flm, fm, left, 0.5 * eps, depth + 1) +
           refine(m, b, 0.5 * h, fm, frm, fb, right, 0.5 * eps, depth + 1);
  }

 private:
  F& f_;
  int max_depth_;
  std::size_t max_evaluations_;
  QuadratureResult& out_;
};

}  // namespace detail

/// Integrates `f` over [a, b] with panel-wise adaptive Simpson refinement.
///
/// Non-convergence is reported through `converged`, never thrown; callers
/// decide whether that is fatal. An empty interval integrates to zero.
template <class F>
QuadratureResult adaptive_simpson(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  QuadratureResult out;
  if (a == b) return out;

  const int panels = opts.base_panels < 1 ? 1 : opts.base_panels;
  const double h = (b - a) / panels;

  // Nodes at every half panel: 2 * panels + 1 evaluations for the coarse pass.
  struct Panel {
    double a, b, fa, fm, fb, whole;
  };
  out.evaluations = 2 * static_cast<std::size_t>(panels) + 1;
  double prev = f(a);
  double coarse = 0.0;

  // Panels are kept so the global tolerance can be fixed from the coarse sum.
  std::vector<Panel> store(static_cast<std::size_t>(panels));
  for (int i = 0; i < panels; ++i) {
    const double pa = a + h * i;
    const double pb = (i + 1 == panels) ? b : a + h * (i + 1);
    const double pm = 0.5 * (pa + pb);
    const double fm = f(pm);
    const double fb = f(pb);
    const double whole = (pb - pa) / 6.0 * (prev + 4.0 * fm + fb);
    store[i] = Panel{pa, pb, prev, fm, fb, whole};
    coarse += whole;
    prev = fb;
  }

  const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(coarse));
  detail::SimpsonRefiner<std::remove_reference_t<F>> refiner(f, opts.max_depth, opts.max_evaluations, out);
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    const Panel& p = store[i];
    const double eps = tol * std::abs((p.b - p.a) / (b - a));
    total += refiner.refine(p.a, p.b, p.b - p.a, p.fa, p.fm, p.fb, p.whole, eps, 1);
  }
  out.value = total;
  return out;
}

}  // namespace kerrsim::numeric
