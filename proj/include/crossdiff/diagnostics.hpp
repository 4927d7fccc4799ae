#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "crossdiff/model.hpp"
#include "crossdiff/scheme.hpp"

namespace crossdiff {

struct DiagnosticsReport {
    double time = 0.0;
    double mass_rho = 0.0, mass_eta = 0.0;
    double moment1_rho = 0.0, moment1_eta = 0.0;    // M1, M2
    double moment2_rho = 0.0, moment2_eta = 0.0;    // Mbar1, Mbar2
    double energy = 0.0;                            // E = int rho log rho + eta log eta
    double min_cell = 0.0;
    std::optional<double> l1_error;
    std::optional<double> linf_error;
    std::optional<double> measured_speed;
};

double total_mass(const CellField& field, const Grid& grid);

/// Returns (first moment, second moment), dx-weighted sums over centers.
std::pair<double, double> moments(const CellField& field, const Grid& grid);

/// Discrete entropy with the 0 log 0 = 0 convention; throws on negative cells.
double energy(const SystemState& state, const Grid& grid);

double min_cell_value(const SystemState& state);

DiagnosticsReport basic_report(const SystemState& state, const Grid& grid);

enum class ErrorNorm { l1, linf };

/// dx-weighted distance between a numeric state and reference cell data,
/// summed over both species. With align=true the reference is shifted by the
/// integer number of cells that maximizes cross-correlation with the numeric
/// data first (translation-invariant profile families).
double profile_error(const SystemState& numeric, const CellField& ref_rho,
                     const CellField& ref_eta, const Grid& grid, ErrorNorm norm,
                     bool align = true);

struct SupportInterval {
    double lo = 0.0;
    double hi = 0.0;
    int first_cell = 0;
    int last_cell = 0;
};

/// Maximal runs of cells with value > threshold_fraction * max(field), merged
/// across single-cell gaps.
std::vector<SupportInterval> extract_support(const CellField& field, const Grid& grid,
                                             double threshold_fraction = 1e-4);

/// Least-squares slope of the rho center of mass over the final half of the
/// trajectory; needs at least 10 snapshots in the fitted window.
double measure_speed(const Trajectory& traj, const Grid& grid);

}  // namespace crossdiff
