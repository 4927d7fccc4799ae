#pragma once

#include <iosfwd>
#include <string>

#include "crossdiff/diagnostics.hpp"
#include "crossdiff/profile_io.hpp"
#include "crossdiff/scheme.hpp"

namespace crossdiff {

/// Snapshot rows `t,x,rho,eta`, full double precision, deterministic order.
std::string snapshots_to_csv(const Trajectory& traj, const Grid& grid);

/// Per-snapshot DiagnosticsReport series plus run metadata.
std::string report_to_json(const Trajectory& traj, const Grid& grid, const std::string& name);

/// Parse a snapshots CSV back into a trajectory (grid is reconstructed from
/// the x column). Throws std::runtime_error on malformed input.
struct LoadedRun {
    Grid grid;
    Trajectory traj;
};
LoadedRun load_snapshots_csv(std::istream& in);

/// Comparison of a finished run against a constructed profile: L1/Linf errors
/// of the final state (translation-aligned), support-endpoint mismatch, and
/// speed mismatch where the profile carries a speed.
std::string compare_to_json(const LoadedRun& run, const ConstructedProfile& profile);

/// Atomic-ish file write: assemble in memory, then write in one go.
/// Returns false (and removes any partial file) on I/O failure.
bool write_file(const std::string& path, const std::string& contents);

}  // namespace crossdiff
