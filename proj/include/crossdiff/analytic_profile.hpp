#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "crossdiff/grid.hpp"

namespace crossdiff {

/// A closed-form steady state or co-moving pulse: pointwise-evaluable pair of
/// densities plus enough structure (support components, kink locations) for
/// projection, quadrature checks, and serialization.
struct AnalyticProfile {
    std::function<double(double)> rho;
    std::function<double(double)> eta;
    // Disjoint closed intervals making up each support, in increasing order.
    std::vector<std::pair<double, double>> rho_support;
    std::vector<std::pair<double, double>> eta_support;
    // All junction/kink abscissae (support endpoints and interior corners).
    std::vector<double> breakpoints;
    double speed = 0.0;  // co-moving frame velocity; 0 for steady states

    CellField project_rho(const Grid& grid) const;
    CellField project_eta(const Grid& grid) const;
};

}  // namespace crossdiff
