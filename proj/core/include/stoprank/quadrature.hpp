#pragma once

#include <functional>

namespace stoprank {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_depth = 50;
};

/// Adaptive Simpson integration of f over [a, b]. Returns 0 when a == b and
/// a negated integral when b < a.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        const QuadratureOptions& options = {});

}  // namespace stoprank
