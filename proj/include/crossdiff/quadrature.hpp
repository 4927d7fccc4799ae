#pragma once

#include <functional>
#include <vector>

namespace crossdiff {

using RealFn = std::function<double(double)>;

/// Fixed 5-point Gauss-Legendre rule on [a, b]; exact through degree 9.
double gauss_legendre_5(const RealFn& f, double a, double b);

/// Adaptive integration on [a, b] to absolute tolerance tol. The integrand
/// should be smooth inside; pass kink locations via `breakpoints` and the
/// interval is split there first.
double integrate_adaptive(const RealFn& f, double a, double b, double tol = 1e-12,
                          const std::vector<double>& breakpoints = {});

}  // namespace crossdiff
