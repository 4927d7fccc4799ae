#include "crossdiff/newton.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace crossdiff {

namespace {

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) {
        if (!std::isfinite(x)) return std::numeric_limits<double>::infinity();
        m = std::max(m, std::abs(x));
    }
    return m;
}

// Solve J s = -r in place by partial-pivot elimination; returns false if singular.
bool solve_linear(std::vector<std::vector<double>> J, std::vector<double> r,
                  std::vector<double>& s) {
    const int n = static_cast<int>(r.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(J[row][col]) > std::abs(J[pivot][col])) pivot = row;
        if (std::abs(J[pivot][col]) < 1e-300) return false;
        std::swap(J[pivot], J[col]);
        std::swap(r[pivot], r[col]);
        for (int row = col + 1; row < n; ++row) {
            const double f = J[row][col] / J[col][col];
            for (int k = col; k < n; ++k) J[row][k] -= f * J[col][k];
            r[row] -= f * r[col];
        }
    }
    s.assign(n, 0.0);
    for (int row = n - 1; row >= 0; --row) {
        double acc = -r[row];
        for (int k = row + 1; k < n; ++k) acc -= J[row][k] * s[k];
        s[row] = acc / J[row][row];
    }
    return true;
}

}  // namespace

std::optional<std::vector<double>> damped_newton(
    const VectorFn& residual, std::vector<double> x, const NewtonOptions& options,
    const std::function<bool(const std::vector<double>&)>& admissible) {
    const int n = static_cast<int>(x.size());
    std::vector<double> r = residual(x);
    double rnorm = inf_norm(r);

    for (int iter = 0; iter < options.max_iterations; ++iter) {
        if (rnorm < options.tol) return x;

        std::vector<std::vector<double>> J(n, std::vector<double>(n));
        for (int j = 0; j < n; ++j) {
            const double h = options.fd_step * std::max(std::abs(x[j]), 1e-6);
            std::vector<double> xp = x;
            xp[j] += h;
            const std::vector<double> rp = residual(xp);
            for (int i = 0; i < n; ++i) J[i][j] = (rp[i] - r[i]) / h;
        }

        std::vector<double> s;
        if (!solve_linear(J, r, s)) return std::nullopt;

        double alpha = 1.0;
        bool accepted = false;
        for (int half = 0; half < options.max_halvings; ++half, alpha *= 0.5) {
            std::vector<double> xt(n);
            for (int i = 0; i < n; ++i) xt[i] = x[i] + alpha * s[i];
            if (admissible && !admissible(xt)) continue;
            std::vector<double> rt = residual(xt);
            const double rtnorm = inf_norm(rt);
            if (rtnorm < rnorm || (alpha == 1.0 && rtnorm < options.tol)) {
                x = std::move(xt);
                r = std::move(rt);
                rnorm = rtnorm;
                accepted = true;
                break;
            }
        }
        if (!accepted) return std::nullopt;
    }
    return rnorm < options.tol ? std::optional<std::vector<double>>(x) : std::nullopt;
}

}  // namespace crossdiff
