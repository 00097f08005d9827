#include "stoprank/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "stoprank/error.hpp"

namespace stoprank {

namespace {

struct Panel {
  double a, m, b;
  double fa, fm, fb;
  double whole;
};

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double refine(const std::function<double(double)>& f, const Panel& p, double tol, int depth) {
  const double lm = 0.5 * (p.a + p.m);
  const double rm = 0.5 * (p.m + p.b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(p.fa, flm, p.fm, p.m - p.a);
  const double right = simpson(p.fm, frm, p.fb, p.b - p.m);
  const double delta = left + right - p.whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return refine(f, {p.a, lm, p.m, p.fa, flm, p.fm, left}, 0.5 * tol, depth - 1) +
         refine(f, {p.m, rm, p.b, p.fm, frm, p.fb, right}, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& options) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw Error(ErrorKind::invalid_argument, "integration bounds must be finite");
  if (a == b) return 0.0;
  if (b < a) return -adaptive_simpson(f, b, a, options);

  // A coarse first pass sets the scale for the relative tolerance; splitting
  // into a few panels up front also keeps a sharp sigmoid from being missed.
  constexpr int kPanels = 16;
  const double h = (b - a) / kPanels;
  double coarse = 0.0;
  std::vector<Panel> panels;
  panels.reserve(kPanels);
  for (int i = 0; i < kPanels; ++i) {
    const double lo = a + h * i;
    const double hi = (i + 1 == kPanels) ? b : a + h * (i + 1);
    const double mid = 0.5 * (lo + hi);
    Panel p{lo, mid, hi, f(lo), f(mid), f(hi), 0.0};
    p.whole = simpson(p.fa, p.fm, p.fb, hi - lo);
    coarse += p.whole;
    panels.push_back(p);
  }
  const double tol = std::max(options.abs_tol, options.rel_tol * std::abs(coarse)) / kPanels;
  double total = 0.0;
  for (const auto& p : panels) total += refine(f, p, tol, options.max_depth);
  return total;
}

}  // namespace stoprank
