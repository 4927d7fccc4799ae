#pragma once

#include <stdexcept>
#include <vector>

#include "crossdiff/model.hpp"

namespace crossdiff {

/// The discrete fields xi_i, zeta_i whose centred differences drive each species.
struct PotentialField {
    std::vector<double> xi;
    std::vector<double> zeta;
};

/// Edge velocities on the N+1 cell interfaces; boundary edges are zero
/// (no-flux convention).
struct EdgeVelocities {
    std::vector<double> U;
    std::vector<double> V;
};

/// Upwind edge fluxes; F[0] = F[N] = G[0] = G[N] = 0.
struct EdgeFluxes {
    std::vector<double> F;
    std::vector<double> G;
};

struct StepControls {
    double cfl_safety = 0.9;   // in (0, 1]
    double dt_max = 1e-2;
    double steady_tol = 1e-8;  // rate criterion ||u^{n+1}-u^n||_1 / (dt (m1+m2))
    double t_end = 10.0;
    int snapshot_stride = 100;  // record every k-th step (initial/final always kept)
    long max_steps = 200'000'000;
};

/// Thrown when an update produces a cell below the roundoff floor (-1e-14),
/// i.e. the supplied dt violated the CFL bound.
class StepRejected : public std::runtime_error {
  public:
    StepRejected(const char* species, int cell, double value);
    const char* species;
    int cell;
    double value;
};

enum class TerminationReason { time_reached, steady_state, step_rejected };

struct Trajectory {
    std::vector<SystemState> snapshots;  // includes initial and final states
    TerminationReason reason = TerminationReason::time_reached;
    long steps = 0;
    const SystemState& final_state() const { return snapshots.back(); }
};

PotentialField compute_potential_fields(const SystemState& state, const KernelSet& kernels,
                                        const ModelParams& params, const Grid& grid);

EdgeVelocities compute_velocities(const PotentialField& fields, const Grid& grid);

EdgeFluxes compute_fluxes(const EdgeVelocities& vel, const SystemState& state);

double cfl_dt(const EdgeVelocities& vel, const Grid& grid, const StepControls& controls);

/// One explicit Euler update. dt must satisfy the CFL bound for the velocities
/// derived from `state`; otherwise StepRejected may be thrown.
SystemState step(const SystemState& state, double dt, const KernelSet& kernels,
                 const ModelParams& params, const Grid& grid);

/// Time loop: fields -> velocities -> dt -> step until t_end or the steady
/// criterion fires. Never throws on CFL rejection; reports it as the
/// termination reason instead.
Trajectory run(const SystemState& initial, const KernelSet& kernels, const ModelParams& params,
               const Grid& grid, const StepControls& controls);

const char* termination_reason_name(TerminationReason reason);

}  // namespace crossdiff
