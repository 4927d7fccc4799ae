#pragma once

#include <functional>
#include <optional>
#include <vector>

namespace crossdiff {

using VectorFn = std::function<std::vector<double>(const std::vector<double>&)>;

struct NewtonOptions {
    double tol = 1e-12;        // residual infinity-norm target
    int max_iterations = 80;
    double fd_step = 1e-7;     // relative finite-difference step
    int max_halvings = 40;     // damping
};

/// Damped Newton with a finite-difference Jacobian. Returns the root if the
/// residual infinity-norm drops below tol; the optional `admissible` predicate
/// rejects iterates that leave the domain (the step is then halved).
std::optional<std::vector<double>> damped_newton(
    const VectorFn& residual, std::vector<double> x0, const NewtonOptions& options = {},
    const std::function<bool(const std::vector<double>&)>& admissible = nullptr);

}  // namespace crossdiff
