#pragma once

#include <array>

#include "crossdiff/analytic_profile.hpp"

namespace crossdiff {

// Closed-form steady states and travelling pulses of the attractive-repulsive
// model (W11 = W22 = x^2/2, W12 = |x| = -W21). All constructors are exact
// formula evaluations; invalid parameter combinations throw
// std::invalid_argument naming the violated inequality.

/// Strictly segregated steady state: rho on [-c, c], eta split onto [a, b] and
/// [d, e] with a < b <= -c < c <= d < e and half of the eta mass on each side.
struct SegregatedProfile {
    double m1 = 0.0, m2 = 0.0, M2 = 0.0, epsilon = 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;

    AnalyticProfile profile() const;
    std::pair<double, double> eval(double x) const;
};

SegregatedProfile segregated_state(double m1, double m2, double M2, double epsilon);

/// eps_c = (4/9) m1^3 (2^(1/3) - 1) / m2^3; strictly segregated states exist
/// only below it.
double critical_epsilon(double m1, double m2);

struct CriticalValues {
    double eps_c = 0.0;
    double M2_max = 0.0;  // admissible |M2| bound at the given epsilon
};

CriticalValues max_M2(double m1, double m2, double epsilon);

/// Vanishing-diffusion limit: rho collapses onto a Dirac at 0, eta onto a
/// symmetric pair; particle_residuals are the three stationarity conditions of
/// the limiting ODE system (identically zero by the sign structure of W').
struct DiracLimit {
    double rho_location = 0.0;
    std::array<double, 2> eta_locations{};
    double rho_weight = 0.0;
    std::array<double, 2> eta_weights{};
    std::array<double, 3> particle_residuals{};
};

DiracLimit vanishing_diffusion_limit(double m1, double m2, double M2);

/// Two identical parabolic pulses travelling at v = m, the repelled species
/// ahead by x0 >= 2a.
struct TwoPulseProfile {
    double m = 0.0, epsilon = 0.0;
    double a = 0.0;   // support half-width (3 eps / 2)^(1/3)
    double x0 = 0.0;  // separation of the pulse centers
    double v = 0.0;   // = m

    /// Co-moving frame: rho centered at -x0, eta centered at 0.
    AnalyticProfile profile() const;
    std::pair<double, double> eval(double z) const;
};

TwoPulseProfile two_pulse(double m, double epsilon, double x0);

/// Support half-width of the hypothetical adjacent two-pulse ansatz,
/// (12 eps)^(1/3); equals twice the segregated value, so adjacent pulses only
/// touch.
double adjacent_pulse_support(double epsilon);

/// rho flanked by two eta pulses of masses mL, mR, travelling at v = mR - mL.
/// The formulas assume the species masses match: mL + mR = m.
struct ThreePulseProfile {
    double m = 0.0, mL = 0.0, mR = 0.0, M2 = 0.0, epsilon = 0.0;
    double a = 0.0, b = 0.0, c = 0.0, d = 0.0, e = 0.0;
    double v = 0.0;

    AnalyticProfile profile() const;
    std::pair<double, double> eval(double z) const;
};

ThreePulseProfile three_pulse(double m, double mL, double mR, double M2, double epsilon);

struct M2Range {
    double M2_min = 0.0;
    double M2_max = 0.0;
};

/// Admissible eta first-moment window for strict segregation of the
/// three-pulse family; the upper end gives b = -c, the lower end c = d.
M2Range three_pulse_M2_range(double m, double mL, double mR, double epsilon);

}  // namespace crossdiff
