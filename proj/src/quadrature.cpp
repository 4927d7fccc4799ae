#include "crossdiff/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace crossdiff {

namespace {

// 5-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr double kNodes[5] = {-0.9061798459386639928, -0.5384693101056830910, 0.0,
                              0.5384693101056830910, 0.9061798459386639928};
constexpr double kWeights[5] = {0.2369268850561890875, 0.4786286704993664680,
                               0.5688888888888888889, 0.4786286704993664680,
                               0.2369268850561890875};

double gl5(const RealFn& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += kWeights[i] * f(mid + half * kNodes[i]);
    return half * sum;
}

double adaptive_gl(const RealFn& f, double a, double b, double whole, double tol, int depth) {
    const double mid = 0.5 * (a + b);
    const double left = gl5(f, a, mid);
    const double right = gl5(f, mid, b);
    const double err = std::abs(left + right - whole);
    if (err < tol || depth >= 48) return left + right;
    return adaptive_gl(f, a, mid, left, 0.5 * tol, depth + 1) +
           adaptive_gl(f, mid, b, right, 0.5 * tol, depth + 1);
}

}  // namespace

double gauss_legendre_5(const RealFn& f, double a, double b) { return gl5(f, a, b); }

double integrate_adaptive(const RealFn& f, double a, double b, double tol,
                          const std::vector<double>& breakpoints) {
    if (a == b) return 0.0;
    double flip = 1.0;
    if (a > b) {
        std::swap(a, b);
        flip = -1.0;
    }
    std::vector<double> pts{a, b};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    double total = 0.0;
    const double piece_tol = tol / static_cast<double>(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const double lo = pts[i], hi = pts[i + 1];
        if (hi <= lo) continue;
        total += adaptive_gl(f, lo, hi, gl5(f, lo, hi), piece_tol, 0);
    }
    return flip * total;
}

}  // namespace crossdiff
