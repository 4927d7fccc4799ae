#pragma once

#include <vector>

namespace crossdiff {

/// Densities as per-cell averages on a uniform grid, mass/length units.
using CellField = std::vector<double>;

/// Uniform 1-D grid of N control volumes covering [-L, L].
/// Cell centers sit at x_i = -L + (i + 1/2) dx, i = 0..N-1.
struct Grid {
    double half_width = 0.0;  // L
    int cell_count = 0;       // N
    double dx = 0.0;          // 2L/N
    std::vector<double> centers;

    double left_edge(int i) const { return -half_width + i * dx; }
    double right_edge(int i) const { return -half_width + (i + 1) * dx; }
};

/// Throws std::invalid_argument unless L > 0 and N >= 2.
Grid build_grid(double half_width, int cell_count);

}  // namespace crossdiff
