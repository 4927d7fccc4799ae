#include "crossdiff/projection.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "crossdiff/quadrature.hpp"

namespace crossdiff {

Segment indicator(double lo, double hi, double mass) {
    if (!(hi > lo)) throw std::invalid_argument("indicator: need hi > lo");
    if (mass < 0.0) throw std::invalid_argument("indicator: negative mass");
    return Segment{lo, hi, mass / (hi - lo)};
}

CellField project_segments(const std::vector<Segment>& segments, const Grid& grid) {
    CellField values(grid.cell_count, 0.0);
    for (const Segment& s : segments) {
        if (s.height < 0.0)
            throw std::invalid_argument("project_segments: negative density height");
        if (!(s.hi > s.lo)) continue;
        if (s.lo < -grid.half_width - 1e-12 || s.hi > grid.half_width + 1e-12)
            throw std::invalid_argument("project_segments: segment [" + std::to_string(s.lo) +
                                        ", " + std::to_string(s.hi) + "] outside the domain");
        for (int i = 0; i < grid.cell_count; ++i) {
            const double overlap =
                std::min(s.hi, grid.right_edge(i)) - std::max(s.lo, grid.left_edge(i));
            if (overlap > 0.0) values[i] += s.height * overlap / grid.dx;
        }
    }
    return values;
}

CellField project_function(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, const Grid& grid) {
    std::vector<double> breaks = breakpoints;
    std::sort(breaks.begin(), breaks.end());
    CellField values(grid.cell_count);
    bool negative = false;
    auto sample = [&](double x) {
        const double v = f(x);
        if (v < -1e-12) negative = true;
        return v;
    };
    for (int i = 0; i < grid.cell_count; ++i) {
        const double a = grid.left_edge(i), b = grid.right_edge(i);
        double integral = 0.0;
        double lo = a;
        for (double p : breaks) {
            if (p <= a || p >= b) continue;
            integral += gauss_legendre_5(sample, lo, p);
            lo = p;
        }
        integral += gauss_legendre_5(sample, lo, b);
        values[i] = integral / grid.dx;
    }
    if (negative)
        throw std::invalid_argument("project_function: density is negative on the grid");
    // Clamp quadrature dust so downstream positivity checks stay meaningful.
    for (double& v : values) v = std::max(v, 0.0);
    return values;
}

}  // namespace crossdiff
