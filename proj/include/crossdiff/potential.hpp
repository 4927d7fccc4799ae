#pragma once

#include <string>
#include <vector>

#include "crossdiff/grid.hpp"

namespace crossdiff {

enum class PotentialFamily {
    quadratic,             // x^2 / 2
    power_law,             // |x|^p
    power_law_normalized,  // |x|^p / p
    abs_value,             // |x|
    morse_like,            // 1 - exp(-|x|^p)
};

/// Radially symmetric interaction potential, sign * W(|x|).
struct PotentialSpec {
    PotentialFamily family = PotentialFamily::quadratic;
    double exponent = 1.0;  // p, used by power_law(_normalized) and morse_like
    double sign = 1.0;      // +1 attractive branch as written, -1 flips it

    bool operator==(const PotentialSpec&) const = default;
};

/// Even in x by construction; total on finite inputs.
double eval_potential(const PotentialSpec& spec, double x);

/// Derivative of sign * W at x (odd function); used by the particle-system
/// residual checks. At x = 0 returns 0 (the symmetric convention).
double eval_potential_derivative(const PotentialSpec& spec, double x);

PotentialSpec parse_potential(const std::string& text);
std::string potential_to_string(const PotentialSpec& spec);

/// Sampled difference table W(x_l - x_k): samples[d + N - 1] = W(d*dx) for
/// d in [-(N-1), N-1]. Symmetric by construction, so row i of the dense
/// difference matrix is the contiguous slice samples[N-1-i .. 2N-2-i].
struct KernelTable {
    std::vector<double> samples;
    int n = 0;  // grid cell count

    double at(int diff) const { return samples[diff + n - 1]; }
    const double* row(int i) const { return samples.data() + (n - 1 - i); }
};

KernelTable build_kernel_table(const PotentialSpec& spec, const Grid& grid);

}  // namespace crossdiff
