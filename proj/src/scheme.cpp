#include "crossdiff/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crossdiff/simd_kernels.hpp"

namespace crossdiff {

KernelSet build_kernel_set(const ModelParams& params, const Grid& grid) {
    return KernelSet{build_kernel_table(params.w11, grid), build_kernel_table(params.w12, grid),
                     build_kernel_table(params.w21, grid), build_kernel_table(params.w22, grid)};
}

ModelParams attractive_attractive_params(double epsilon) {
    ModelParams p;
    p.epsilon = epsilon;
    p.w11 = p.w22 = PotentialSpec{PotentialFamily::quadratic};
    p.w12 = p.w21 = PotentialSpec{PotentialFamily::abs_value};
    return p;
}

ModelParams attractive_repulsive_params(double epsilon) {
    ModelParams p = attractive_attractive_params(epsilon);
    p.w21.sign = -1.0;
    return p;
}

StepRejected::StepRejected(const char* species_, int cell_, double value_)
    : std::runtime_error(std::string("step rejected: ") + species_ + "[" +
                         std::to_string(cell_) + "] = " + std::to_string(value_) +
                         " (CFL violation)"),
      species(species_), cell(cell_), value(value_) {}

PotentialField compute_potential_fields(const SystemState& state, const KernelSet& kernels,
                                        const ModelParams& params, const Grid& grid) {
    const int n = grid.cell_count;
    if (static_cast<int>(state.rho.size()) != n || static_cast<int>(state.eta.size()) != n ||
        kernels.w11.n != n || kernels.w12.n != n || kernels.w21.n != n || kernels.w22.n != n)
        throw std::invalid_argument("compute_potential_fields: state/kernels do not match grid");

    PotentialField out;
    out.xi.resize(n);
    out.zeta.resize(n);
    const double* rho = state.rho.data();
    const double* eta = state.eta.data();
    for (int i = 0; i < n; ++i) {
        const double conv1 =
            simd::dual_dot(kernels.w11.row(i), rho, kernels.w12.row(i), eta, n);
        const double conv2 =
            simd::dual_dot(kernels.w22.row(i), eta, kernels.w21.row(i), rho, n);
        const double pressure = params.epsilon * (rho[i] + eta[i]);
        out.xi[i] = grid.dx * conv1 + pressure;
        out.zeta[i] = grid.dx * conv2 + pressure;
    }
    return out;
}

EdgeVelocities compute_velocities(const PotentialField& fields, const Grid& grid) {
    const int n = static_cast<int>(fields.xi.size());
    EdgeVelocities vel;
    vel.U.assign(n + 1, 0.0);
    vel.V.assign(n + 1, 0.0);
    for (int e = 1; e < n; ++e) {
        vel.U[e] = -(fields.xi[e] - fields.xi[e - 1]) / grid.dx;
        vel.V[e] = -(fields.zeta[e] - fields.zeta[e - 1]) / grid.dx;
    }
    return vel;
}

EdgeFluxes compute_fluxes(const EdgeVelocities& vel, const SystemState& state) {
    const int n = static_cast<int>(state.rho.size());
    EdgeFluxes flux;
    flux.F.assign(n + 1, 0.0);
    flux.G.assign(n + 1, 0.0);
    for (int e = 1; e < n; ++e) {
        const double u = vel.U[e];
        const double v = vel.V[e];
        flux.F[e] = std::max(u, 0.0) * state.rho[e - 1] + std::min(u, 0.0) * state.rho[e];
        flux.G[e] = std::max(v, 0.0) * state.eta[e - 1] + std::min(v, 0.0) * state.eta[e];
    }
    return flux;
}

double cfl_dt(const EdgeVelocities& vel, const Grid& grid, const StepControls& controls) {
    double vmax = 0.0;
    for (double u : vel.U) vmax = std::max(vmax, std::abs(u));
    for (double v : vel.V) vmax = std::max(vmax, std::abs(v));
    if (vmax == 0.0) return controls.dt_max;
    return std::min(controls.dt_max, controls.cfl_safety * grid.dx / (2.0 * vmax));
}

namespace {

constexpr double kNegativityFloor = -1e-14;

void apply_update(const CellField& in, CellField& out, const std::vector<double>& flux,
                  double lambda, const char* species) {
    const int n = static_cast<int>(in.size());
    for (int i = 0; i < n; ++i) {
        double v = in[i] - lambda * (flux[i + 1] - flux[i]);
        if (v < kNegativityFloor) throw StepRejected(species, i, v);
        out[i] = std::max(v, 0.0);
    }
}

}  // namespace

SystemState step(const SystemState& state, double dt, const KernelSet& kernels,
                 const ModelParams& params, const Grid& grid) {
    const PotentialField fields = compute_potential_fields(state, kernels, params, grid);
    const EdgeVelocities vel = compute_velocities(fields, grid);
    const EdgeFluxes flux = compute_fluxes(vel, state);
    SystemState next;
    next.rho.resize(state.rho.size());
    next.eta.resize(state.eta.size());
    const double lambda = dt / grid.dx;
    apply_update(state.rho, next.rho, flux.F, lambda, "rho");
    apply_update(state.eta, next.eta, flux.G, lambda, "eta");
    next.time = state.time + dt;
    return next;
}

Trajectory run(const SystemState& initial, const KernelSet& kernels, const ModelParams& params,
               const Grid& grid, const StepControls& controls) {
    Trajectory traj;
    traj.snapshots.push_back(initial);

    double total_mass = 0.0;
    for (double v : initial.rho) total_mass += v;
    for (double v : initial.eta) total_mass += v;
    total_mass *= grid.dx;
    if (total_mass == 0.0) {  // nothing can ever move
        traj.reason = TerminationReason::steady_state;
        return traj;
    }

    SystemState state = initial;
    const double lambda_scale = 1.0 / grid.dx;
    while (state.time < controls.t_end && traj.steps < controls.max_steps) {
        const PotentialField fields = compute_potential_fields(state, kernels, params, grid);
        const EdgeVelocities vel = compute_velocities(fields, grid);
        double dt = cfl_dt(vel, grid, controls);
        dt = std::min(dt, controls.t_end - state.time);
        const EdgeFluxes flux = compute_fluxes(vel, state);

        SystemState next;
        next.rho.resize(state.rho.size());
        next.eta.resize(state.eta.size());
        try {
            apply_update(state.rho, next.rho, flux.F, dt * lambda_scale, "rho");
            apply_update(state.eta, next.eta, flux.G, dt * lambda_scale, "eta");
        } catch (const StepRejected&) {
            traj.reason = TerminationReason::step_rejected;
            if (traj.snapshots.back().time != state.time) traj.snapshots.push_back(state);
            return traj;
        }
        next.time = state.time + dt;

        double change = 0.0;
        for (std::size_t i = 0; i < next.rho.size(); ++i) {
            change += std::abs(next.rho[i] - state.rho[i]);
            change += std::abs(next.eta[i] - state.eta[i]);
        }
        change *= grid.dx;

        state = std::move(next);
        ++traj.steps;
        if (controls.snapshot_stride > 0 && traj.steps % controls.snapshot_stride == 0)
            traj.snapshots.push_back(state);

        if (change / (dt * total_mass) < controls.steady_tol) {
            traj.reason = TerminationReason::steady_state;
            if (traj.snapshots.back().time != state.time) traj.snapshots.push_back(state);
            return traj;
        }
    }
    traj.reason = TerminationReason::time_reached;
    if (traj.snapshots.back().time != state.time) traj.snapshots.push_back(state);
    return traj;
}

const char* termination_reason_name(TerminationReason reason) {
    switch (reason) {
        case TerminationReason::time_reached: return "time_reached";
        case TerminationReason::steady_state: return "steady_state";
        case TerminationReason::step_rejected: return "step_rejected";
    }
    return "?";
}

}  // namespace crossdiff
