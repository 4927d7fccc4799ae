#include "crossdiff/profile_io.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "crossdiff/projection.hpp"

namespace crossdiff {

using nlohmann::json;

CellField AnalyticProfile::project_rho(const Grid& grid) const {
    return project_function(rho, breakpoints, grid);
}

CellField AnalyticProfile::project_eta(const Grid& grid) const {
    return project_function(eta, breakpoints, grid);
}

std::string profile_family_name(const ConstructedProfile& profile) {
    return std::visit(
        [](const auto& p) -> std::string {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, BatmanProfile>) return "batman";
            if constexpr (std::is_same_v<T, SecondKindProfile>) return "second_kind";
            if constexpr (std::is_same_v<T, SegregatedProfile>) return "segregated";
            if constexpr (std::is_same_v<T, TwoPulseProfile>) return "two_pulse";
            if constexpr (std::is_same_v<T, ThreePulseProfile>) return "three_pulse";
        },
        profile);
}

AnalyticProfile to_analytic(const ConstructedProfile& profile) {
    return std::visit([](const auto& p) { return p.profile(); }, profile);
}

namespace {

json support_json(const std::vector<std::pair<double, double>>& support) {
    json arr = json::array();
    for (const auto& [lo, hi] : support) arr.push_back({lo, hi});
    return arr;
}

}  // namespace

std::string profile_to_json(const ConstructedProfile& profile) {
    json doc;
    doc["family"] = profile_family_name(profile);
    const AnalyticProfile ap = to_analytic(profile);
    doc["support"]["rho"] = support_json(ap.rho_support);
    doc["support"]["eta"] = support_json(ap.eta_support);
    doc["speed"] = ap.speed;

    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            json& par = doc["parameters"];
            json& val = doc["values"];
            if constexpr (std::is_same_v<T, BatmanProfile>) {
                par = {{"m1", p.m1}, {"m2", p.m2}, {"epsilon", p.epsilon}};
                val = {{"b", p.b}, {"c", p.c}, {"u_hat2", p.u_hat2}, {"eta_at_b", p.eta_at_b}};
                doc["residuals"] = {p.r1, p.r2};
            } else if constexpr (std::is_same_v<T, SecondKindProfile>) {
                par = {{"m1", p.m1}, {"m2", p.m2}, {"epsilon", p.epsilon}, {"p", p.p}};
                val = {{"b", p.b},
                       {"c", p.c},
                       {"d", p.d},
                       {"B", p.amplitude},
                       {"corners_are_rho", p.corners_are_rho},
                       {"split_at_b", p.split_at_b},
                       {"edge_velocity_at_c", p.edge_velocity_at_c},
                       {"continuity_check_at_c", p.continuity_check_at_c}};
                doc["residuals"] = p.residuals;
            } else if constexpr (std::is_same_v<T, SegregatedProfile>) {
                par = {{"m1", p.m1}, {"m2", p.m2}, {"M2", p.M2}, {"epsilon", p.epsilon}};
                val = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}};
            } else if constexpr (std::is_same_v<T, TwoPulseProfile>) {
                par = {{"m", p.m}, {"epsilon", p.epsilon}, {"x0", p.x0}};
                val = {{"a", p.a}, {"v", p.v}};
            } else if constexpr (std::is_same_v<T, ThreePulseProfile>) {
                par = {{"m", p.m}, {"mL", p.mL}, {"mR", p.mR},
                       {"M2", p.M2}, {"epsilon", p.epsilon}};
                val = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"e", p.e}, {"v", p.v}};
            }
        },
        profile);
    return doc.dump(2);
}

ConstructedProfile profile_from_json(const std::string& text) {
    json doc = json::parse(text);
    const std::string family = doc.at("family");
    const json& par = doc.at("parameters");
    if (family == "batman") {
        auto prof = solve_batman(par.at("m1"), par.at("m2"), par.at("epsilon"));
        if (!prof) throw std::runtime_error("profile_from_json: batman root no longer found");
        return *prof;
    }
    if (family == "second_kind") {
        auto prof = solve_second_kind(par.at("p"), par.at("m1"), par.at("m2"), par.at("epsilon"));
        if (!prof) throw std::runtime_error("profile_from_json: second-kind root not found");
        return *prof;
    }
    if (family == "segregated")
        return segregated_state(par.at("m1"), par.at("m2"), par.at("M2"), par.at("epsilon"));
    if (family == "two_pulse")
        return two_pulse(par.at("m"), par.at("epsilon"), par.at("x0"));
    if (family == "three_pulse")
        return three_pulse(par.at("m"), par.at("mL"), par.at("mR"), par.at("M2"),
                           par.at("epsilon"));
    throw std::runtime_error("profile_from_json: unknown family '" + family + "'");
}

void write_profile_csv(std::ostream& out, const ConstructedProfile& profile, const Grid& grid) {
    const AnalyticProfile ap = to_analytic(profile);
    const CellField rho = ap.project_rho(grid);
    const CellField eta = ap.project_eta(grid);
    out << "x,rho,eta\n";
    char buf[96];
    for (int i = 0; i < grid.cell_count; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", grid.centers[i], rho[i], eta[i]);
        out << buf;
    }
}

}  // namespace crossdiff
