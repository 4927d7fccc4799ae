#include "crossdiff/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crossdiff {

double eval_potential(const PotentialSpec& spec, double x) {
    const double r = std::abs(x);
    double w = 0.0;
    switch (spec.family) {
        case PotentialFamily::quadratic: w = 0.5 * r * r; break;
        case PotentialFamily::power_law: w = std::pow(r, spec.exponent); break;
        case PotentialFamily::power_law_normalized:
            w = std::pow(r, spec.exponent) / spec.exponent;
            break;
        case PotentialFamily::abs_value: w = r; break;
        case PotentialFamily::morse_like:
            w = 1.0 - std::exp(-std::pow(r, spec.exponent));
            break;
    }
    return spec.sign * w;
}

double eval_potential_derivative(const PotentialSpec& spec, double x) {
    if (x == 0.0) return 0.0;
    const double r = std::abs(x);
    const double s = x > 0.0 ? 1.0 : -1.0;
    const double p = spec.exponent;
    double dw = 0.0;
    switch (spec.family) {
        case PotentialFamily::quadratic: dw = r; break;
        case PotentialFamily::power_law: dw = p * std::pow(r, p - 1.0); break;
        case PotentialFamily::power_law_normalized: dw = std::pow(r, p - 1.0); break;
        case PotentialFamily::abs_value: dw = 1.0; break;
        case PotentialFamily::morse_like:
            dw = p * std::pow(r, p - 1.0) * std::exp(-std::pow(r, p));
            break;
    }
    return spec.sign * s * dw;
}

PotentialSpec parse_potential(const std::string& text) {
    // Grammar: [-]family[:p], e.g. "abs", "-abs", "quadratic", "power:1.5",
    // "power_norm:2", "morse:0.5".
    PotentialSpec spec;
    std::string body = text;
    if (!body.empty() && body.front() == '-') {
        spec.sign = -1.0;
        body.erase(body.begin());
    } else if (!body.empty() && body.front() == '+') {
        body.erase(body.begin());
    }
    std::string name = body;
    double p = 1.0;
    bool has_p = false;
    if (auto colon = body.find(':'); colon != std::string::npos) {
        name = body.substr(0, colon);
        p = std::stod(body.substr(colon + 1));
        has_p = true;
    }
    if (name == "quadratic") {
        spec.family = PotentialFamily::quadratic;
    } else if (name == "abs") {
        spec.family = PotentialFamily::abs_value;
    } else if (name == "power") {
        spec.family = PotentialFamily::power_law;
        spec.exponent = p;
    } else if (name == "power_norm") {
        spec.family = PotentialFamily::power_law_normalized;
        spec.exponent = has_p ? p : 2.0;
    } else if (name == "morse") {
        spec.family = PotentialFamily::morse_like;
        spec.exponent = p;
    } else {
        throw std::invalid_argument("unknown potential family: '" + text + "'");
    }
    if (!(spec.exponent > 0.0))
        throw std::invalid_argument("potential exponent must be positive: '" + text + "'");
    return spec;
}

std::string potential_to_string(const PotentialSpec& spec) {
    std::ostringstream out;
    if (spec.sign < 0.0) out << '-';
    switch (spec.family) {
        case PotentialFamily::quadratic: out << "quadratic"; break;
        case PotentialFamily::abs_value: out << "abs"; break;
        case PotentialFamily::power_law: out << "power:" << spec.exponent; break;
        case PotentialFamily::power_law_normalized: out << "power_norm:" << spec.exponent; break;
        case PotentialFamily::morse_like: out << "morse:" << spec.exponent; break;
    }
    return out.str();
}

KernelTable build_kernel_table(const PotentialSpec& spec, const Grid& grid) {
    const int n = grid.cell_count;
    KernelTable table;
    table.n = n;
    table.samples.resize(2 * n - 1);
    // Fill the non-negative half and mirror it so evenness holds exactly.
    for (int d = 0; d < n; ++d) {
        const double w = eval_potential(spec, d * grid.dx);
        table.samples[n - 1 + d] = w;
        table.samples[n - 1 - d] = w;
    }
    return table;
}

}  // namespace crossdiff
