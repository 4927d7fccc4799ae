#pragma once

#include <functional>
#include <vector>

#include "crossdiff/grid.hpp"

namespace crossdiff {

/// One piece of a piecewise-constant density: height on [lo, hi).
struct Segment {
    double lo = 0.0;
    double hi = 0.0;
    double height = 0.0;
};

/// Indicator of [lo, hi] carrying total mass `mass`.
Segment indicator(double lo, double hi, double mass);

/// Cell averages of a piecewise-constant density, computed by exact interval
/// overlap. Throws std::invalid_argument on negative heights or segments
/// reaching outside the grid.
CellField project_segments(const std::vector<Segment>& segments, const Grid& grid);

/// Cell averages of a smooth-by-pieces density f, 5-point Gauss-Legendre per
/// cell with cells split at the listed breakpoints. Throws on sampled
/// negative values below -1e-12.
CellField project_function(const std::function<double(double)>& f,
                           const std::vector<double>& breakpoints, const Grid& grid);

}  // namespace crossdiff
