#include "crossdiff/steady_check.hpp"

#include <algorithm>
#include <cmath>

#include "crossdiff/quadrature.hpp"

namespace crossdiff {

namespace {

constexpr double kQuadTol = 1e-11;

double convolve_at(const PotentialSpec& w, const std::function<double(double)>& f,
                   const std::vector<std::pair<double, double>>& support,
                   const std::vector<double>& breakpoints, double x) {
    double total = 0.0;
    for (const auto& [lo, hi] : support) {
        std::vector<double> pts = breakpoints;
        pts.push_back(x);  // |x - y| kinks at y = x
        auto integrand = [&](double y) { return eval_potential(w, x - y) * f(y); };
        total += integrate_adaptive(integrand, lo, hi, kQuadTol, pts);
    }
    return total;
}

SteadyStateResidual verify_impl(const AnalyticProfile& prof, const ModelParams& params,
                                double speed) {
    SteadyStateResidual out;
    const int samples_per_component = 25;

    auto lhs = [&](double x, bool first_species) {
        const double rho = prof.rho(x);
        const double eta = prof.eta(x);
        const double pressure = params.epsilon * (rho + eta);
        double conv;
        if (first_species)
            conv = convolve_at(params.w11, prof.rho, prof.rho_support, prof.breakpoints, x) +
                   convolve_at(params.w12, prof.eta, prof.eta_support, prof.breakpoints, x);
        else
            conv = convolve_at(params.w22, prof.eta, prof.eta_support, prof.breakpoints, x) +
                   convolve_at(params.w21, prof.rho, prof.rho_support, prof.breakpoints, x);
        return conv + pressure + speed * x;
    };

    auto check_components = [&](const std::vector<std::pair<double, double>>& support,
                                bool first_species, double* fitted_first) {
        bool first = true;
        for (const auto& [lo, hi] : support) {
            if (!(hi > lo)) continue;
            std::vector<double> values;
            values.reserve(samples_per_component);
            for (int k = 1; k <= samples_per_component; ++k) {
                const double x = lo + (hi - lo) * k / (samples_per_component + 1);
                values.push_back(lhs(x, first_species));
            }
            double mean = 0.0;
            for (double v : values) mean += v;
            mean /= values.size();
            for (double v : values)
                out.max_deviation = std::max(out.max_deviation, std::abs(v - mean));
            if (first && fitted_first) {
                *fitted_first = mean;
                first = false;
            }
        }
    };

    check_components(prof.rho_support, true, &out.c1);
    check_components(prof.eta_support, false, &out.c2);
    return out;
}

}  // namespace

SteadyStateResidual verify_steady_state(const AnalyticProfile& profile,
                                        const ModelParams& params) {
    return verify_impl(profile, params, 0.0);
}

SteadyStateResidual verify_comoving_state(const AnalyticProfile& profile,
                                          const ModelParams& params) {
    return verify_impl(profile, params, profile.speed);
}

}  // namespace crossdiff
