#include "crossdiff/presets.hpp"

#include <cmath>
#include <stdexcept>

#include "crossdiff/analytic_ar.hpp"

namespace crossdiff {

namespace {

RunConfig base_run(const std::string& name, double L, int N, ModelParams model, double t_end,
                   double steady_tol = 1e-8) {
    RunConfig c;
    c.name = name;
    c.grid_L = L;
    c.grid_N = N;
    c.model = model;
    c.controls.t_end = t_end;
    c.controls.steady_tol = steady_tol;
    c.controls.snapshot_stride = 500;
    return c;
}

// The reference split-indicator data: rho = 2 m1 on [-1/2, 0], eta = 2 m2 on
// [0, 1/2].
void split_indicator(RunConfig& c, double m1, double m2) {
    c.initial.rho_segments = {indicator(-0.5, 0.0, m1)};
    c.initial.eta_segments = {indicator(0.0, 0.5, m2)};
}

Preset batman_fig4_1() {
    Preset p{"batman_fig4_1",
             "symmetric Batman steady state, eps=0.12, m1=0.6, m2=0.1",
             {}};
    RunConfig c = base_run("batman_fig4_1", 3.0, 800, attractive_attractive_params(0.12), 200.0);
    split_indicator(c, 0.6, 0.1);
    p.runs.push_back(c);
    return p;
}

Preset overlap_fig4_2() {
    Preset p{"overlap_fig4_2", "complete overlap (cosine) steady state, eps=1, m1=m2=1", {}};
    RunConfig c = base_run("overlap_fig4_2", 4.0, 800, attractive_attractive_params(1.0), 200.0);
    split_indicator(c, 1.0, 1.0);
    p.runs.push_back(c);
    return p;
}

Preset second_kind_fig4_3() {
    Preset p{"second_kind_fig4_3",
             "second-kind steady state with corner bumps, eps=1.7, m1=0.1, m2=0.6",
             {}};
    RunConfig c =
        base_run("second_kind_fig4_3", 6.0, 800, attractive_attractive_params(1.7), 600.0, 1e-7);
    c.initial.rho_segments = {indicator(-1.5, 1.5, 0.1)};
    c.initial.eta_segments = {indicator(-0.5, 0.5, 0.6)};
    p.runs.push_back(c);
    return p;
}

Preset bifurcation_fig4_4() {
    Preset p{"bifurcation_fig4_4",
             "bifurcation scan over eps in [0.5, 3], m1=0.1, m2=0.6 (scan only, no runs)",
             {}};
    return p;
}

Preset envelopes_fig4_5() {
    Preset p{"envelopes_fig4_5",
             "min/max corner mass fraction from two initial arrangements, eps=1.7",
             {}};
    RunConfig inside =
        base_run("envelopes_fig4_5_eta_inside", 6.0, 800, attractive_attractive_params(1.7),
                 600.0, 1e-7);
    inside.initial.rho_segments = {indicator(-1.5, 1.5, 0.1)};
    inside.initial.eta_segments = {indicator(-0.5, 0.5, 0.6)};
    p.runs.push_back(inside);
    RunConfig around =
        base_run("envelopes_fig4_5_eta_around", 6.0, 800, attractive_attractive_params(1.7),
                 600.0, 1e-7);
    around.initial.rho_segments = {indicator(-0.5, 0.5, 0.1)};
    around.initial.eta_segments = {indicator(-2.0, -0.75, 0.3), indicator(0.75, 2.0, 0.3)};
    p.runs.push_back(around);
    return p;
}

Preset asym_fig4_6() {
    Preset p{"asym_fig4_6",
             "asymmetric steady states (qualitative reproduction; initial supports are our "
             "reconstruction)",
             {}};
    RunConfig a = base_run("asym_fig4_6_a", 8.0, 800, attractive_attractive_params(3.0), 600.0,
                           1e-7);
    a.initial.rho_segments = {indicator(-2.0, -0.5, 1.0)};
    a.initial.eta_segments = {indicator(-1.0, 2.5, 2.0)};
    p.runs.push_back(a);
    RunConfig b = base_run("asym_fig4_6_b", 8.0, 800, attractive_attractive_params(3.0), 600.0,
                           1e-7);
    b.initial.rho_segments = {indicator(-2.0, 0.25, 1.0)};
    b.initial.eta_segments = {indicator(-0.25, 2.0, 1.0)};
    p.runs.push_back(b);
    return p;
}

Preset asym_family_fig4_7() {
    Preset p{"asym_family_fig4_7",
             "family of asymmetric states, m1=0.6, m2=0.1, eps=1.2 (qualitative reproduction)",
             {}};
    // The family members differ by how much of the light species starts in
    // the left corner; the attractor keeps that imbalance.
    const double left_fraction[3] = {0.85, 0.65, 0.45};
    for (int k = 0; k < 3; ++k) {
        RunConfig c = base_run("asym_family_fig4_7_" + std::to_string(k + 1), 6.0, 800,
                               attractive_attractive_params(1.2), 600.0, 1e-7);
        c.initial.rho_segments = {indicator(-1.0, 1.0, 0.6)};
        const double f = left_fraction[k];
        c.initial.eta_segments = {indicator(-2.0, -1.2, 0.1 * f),
                                  indicator(1.2, 2.0, 0.1 * (1.0 - f))};
        p.runs.push_back(c);
    }
    return p;
}

Preset segregation_fig4_8() {
    Preset p{"segregation_fig4_8",
             "segregated steady-state family parameterised by M2, eps=0.05, m1=m2=1",
             {}};
    const double m2_targets[3] = {0.0, 0.2, -0.2};
    for (int k = 0; k < 3; ++k) {
        RunConfig c = base_run("segregation_fig4_8_" + std::to_string(k + 1), 4.0, 800,
                               attractive_repulsive_params(0.05), 300.0);
        const double off = m2_targets[k];
        c.initial.rho_segments = {indicator(-0.5, 0.5, 1.0)};
        c.initial.eta_segments = {indicator(-1.5 + off, -0.5 + off, 0.5),
                                  indicator(0.5 + off, 1.5 + off, 0.5)};
        p.runs.push_back(c);
    }
    return p;
}

Preset eps_sweep_fig4_9() {
    Preset p{"eps_sweep_fig4_9",
             "transition segregated -> touching -> adjacent as eps crosses eps_c, m1=m2=1",
             {}};
    const double eps_values[3] = {0.05, critical_epsilon(1.0, 1.0), 0.5};
    for (int k = 0; k < 3; ++k) {
        RunConfig c = base_run("eps_sweep_fig4_9_" + std::to_string(k + 1), 4.0, 800,
                               attractive_repulsive_params(eps_values[k]), 300.0);
        c.initial.rho_segments = {indicator(-0.5, 0.5, 1.0)};
        c.initial.eta_segments = {indicator(-1.5, -0.5, 0.5), indicator(0.5, 1.5, 0.5)};
        p.runs.push_back(c);
    }
    return p;
}

Preset two_pulse_fig4_10() {
    Preset p{"two_pulse_fig4_10",
             "two travelling pulses, m=1 each, speed v=m=1 (eps=2/3 so the support radius is 1)",
             {}};
    RunConfig c = base_run("two_pulse_fig4_10", 12.0, 800,
                           attractive_repulsive_params(2.0 / 3.0), 8.0);
    c.initial.rho_segments = {indicator(-4.0, -2.0, 1.0)};
    c.initial.eta_segments = {indicator(-1.0, 1.0, 1.0)};
    c.controls.snapshot_stride = 100;
    p.runs.push_back(c);
    return p;
}

Preset three_pulse_fig4_11() {
    Preset p{"three_pulse_fig4_11",
             "three-pulse travelling wave, mL=1/3, mR=2/3, speed v=1/3 (eps=2/3)",
             {}};
    RunConfig c = base_run("three_pulse_fig4_11", 12.0, 800,
                           attractive_repulsive_params(2.0 / 3.0), 24.0);
    c.initial.rho_segments = {indicator(-1.0, 1.0, 1.0)};
    c.initial.eta_segments = {indicator(-2.5, -1.5, 1.0 / 3.0), indicator(1.5, 2.5, 2.0 / 3.0)};
    c.controls.snapshot_stride = 100;
    p.runs.push_back(c);
    return p;
}

Preset generality_fig5_1() {
    Preset p{"generality_fig5_1",
             "Batman-like states for power-law and Morse-like cross-interactions (qualitative)",
             {}};
    const char* cross[6] = {"power:0.5", "abs", "power:1.5", "morse:0.5", "morse:1", "morse:1.5"};
    for (int k = 0; k < 6; ++k) {
        ModelParams model = attractive_attractive_params(0.2);
        model.w12 = model.w21 = parse_potential(cross[k]);
        RunConfig c = base_run("generality_fig5_1_" + std::to_string(k + 1), 4.0, 800, model,
                               300.0, 1e-7);
        split_indicator(c, 0.6, 0.1);
        p.runs.push_back(c);
    }
    return p;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = {
        "batman_fig4_1",     "overlap_fig4_2",     "second_kind_fig4_3", "bifurcation_fig4_4",
        "envelopes_fig4_5",  "asym_fig4_6",        "asym_family_fig4_7", "segregation_fig4_8",
        "eps_sweep_fig4_9",  "two_pulse_fig4_10",  "three_pulse_fig4_11", "generality_fig5_1"};
    return names;
}

bool is_preset_name(const std::string& name) {
    for (const auto& n : preset_names())
        if (n == name) return true;
    return false;
}

Preset make_preset(const std::string& name) {
    if (name == "batman_fig4_1") return batman_fig4_1();
    if (name == "overlap_fig4_2") return overlap_fig4_2();
    if (name == "second_kind_fig4_3") return second_kind_fig4_3();
    if (name == "bifurcation_fig4_4") return bifurcation_fig4_4();
    if (name == "envelopes_fig4_5") return envelopes_fig4_5();
    if (name == "asym_fig4_6") return asym_fig4_6();
    if (name == "asym_family_fig4_7") return asym_family_fig4_7();
    if (name == "segregation_fig4_8") return segregation_fig4_8();
    if (name == "eps_sweep_fig4_9") return eps_sweep_fig4_9();
    if (name == "two_pulse_fig4_10") return two_pulse_fig4_10();
    if (name == "three_pulse_fig4_11") return three_pulse_fig4_11();
    if (name == "generality_fig5_1") return generality_fig5_1();
    throw std::invalid_argument("unknown preset '" + name + "'");
}

RunConfig preset_base_config(const std::string& name) {
    Preset p = make_preset(name);
    if (p.runs.empty())
        throw std::invalid_argument("preset '" + name + "' is a scan preset; use the scan command");
    return p.runs.front();
}

}  // namespace crossdiff
