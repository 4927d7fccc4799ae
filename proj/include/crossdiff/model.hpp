#pragma once

#include "crossdiff/grid.hpp"
#include "crossdiff/potential.hpp"

namespace crossdiff {

/// Cross-diffusivity and the 2x2 interaction potential matrix.
struct ModelParams {
    double epsilon = 1.0;  // > 0
    PotentialSpec w11, w12, w21, w22;
};

/// Both species on one grid at one time instant.
struct SystemState {
    CellField rho;
    CellField eta;
    double time = 0.0;
};

/// All four kernel tables sampled on one grid.
struct KernelSet {
    KernelTable w11, w12, w21, w22;
};

KernelSet build_kernel_set(const ModelParams& params, const Grid& grid);

/// Attractive-attractive reference model: W11 = W22 = x^2/2, W12 = W21 = |x|.
ModelParams attractive_attractive_params(double epsilon);
/// Attractive-repulsive reference model: W12 = |x| = -W21, same self terms.
ModelParams attractive_repulsive_params(double epsilon);

}  // namespace crossdiff
