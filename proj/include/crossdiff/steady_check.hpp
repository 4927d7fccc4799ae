#pragma once

#include "crossdiff/analytic_profile.hpp"
#include "crossdiff/model.hpp"

namespace crossdiff {

/// Outcome of checking the steady-state (or co-moving) balance on each
/// connected support component: the convolution side must be constant there.
struct SteadyStateResidual {
    double c1 = 0.0;  // fitted constant on the first rho component
    double c2 = 0.0;  // fitted constant on the first eta component
    double max_deviation = 0.0;
};

/// Evaluates W11*rho + W12*eta + eps(rho+eta) (and the eta counterpart) by
/// adaptive quadrature of the closed-form profile and measures the deviation
/// from a per-component constant. Independent of the grid/scheme code path.
SteadyStateResidual verify_steady_state(const AnalyticProfile& profile,
                                        const ModelParams& params);

/// Same balance with the +v z co-moving term, v taken from the profile.
SteadyStateResidual verify_comoving_state(const AnalyticProfile& profile,
                                          const ModelParams& params);

}  // namespace crossdiff
