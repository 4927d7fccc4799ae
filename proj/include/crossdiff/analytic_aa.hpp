#pragma once

#include <array>
#include <optional>

#include "crossdiff/analytic_profile.hpp"

namespace crossdiff {

// Closed-form steady states of the attractive-attractive model
// (W11 = W22 = x^2/2, W12 = W21 = |x|).

/// Symmetric steady state with a cosine coexistence core on [-b, b] flanked by
/// parabolic wings of the wider species on [b, c]. The wider species is rho
/// by convention (m1 >= m2).
struct BatmanProfile {
    double m1 = 0.0, m2 = 0.0, epsilon = 0.0;
    double b = 0.0, c = 0.0;   // support radii, 0 < b <= c
    double u_hat2 = 0.0;       // cosine amplitude
    double r1 = 0.0, r2 = 0.0; // residuals of the two support equations
    double eta_at_b = 0.0;     // inner density of the narrow species at x = b

    AnalyticProfile profile() const;
    std::pair<double, double> eval(double x) const;  // (rho, eta)
};

/// Residuals of the two algebraic support equations (mass relation between b
/// and c; continuity of rho+eta at b). Throws on the cotangent pole.
std::array<double, 2> batman_residuals(double b, double c, double m1, double m2, double epsilon);

/// Coarse residual-grid scan plus damped Newton on the first cotangent branch
/// b in (0, pi sqrt(eps)). Requires m1 >= m2 > 0. Returns nullopt when no
/// admissible root (non-negative densities) exists.
std::optional<BatmanProfile> solve_batman(double m1, double m2, double epsilon);

/// Leading-order coefficients of the small-epsilon expansion b ~ sqrt(eps) b0,
/// c ~ sqrt(eps) c0.
struct AsymptoticSupport {
    double b0 = 0.0;
    double c0 = 0.0;
};
AsymptoticSupport small_eps_support(double m1, double m2);

/// Steady state where the lighter species also carries corner bumps beyond the
/// heavier species' support: inner components on [-b, b], heavy species spans
/// [-c, c], corners on [c, d]. p is the corner mass fraction of the split
/// (lighter) species.
struct SecondKindProfile {
    double m1 = 0.0, m2 = 0.0, epsilon = 0.0;
    double b = 0.0, c = 0.0, d = 0.0;
    double amplitude = 0.0;  // cosine amplitude B
    double p = 0.0;
    std::array<double, 4> residuals{};
    double continuity_check_at_c = 0.0;
    bool corners_are_rho = false;  // which input species carries the corners
    double split_at_b = 0.0;       // split-species density at x = b (>= 0 required)
    double edge_velocity_at_c = 0.0;  // split-species velocity just inside x = c

    AnalyticProfile profile() const;
    std::pair<double, double> eval(double x) const;
};

struct SecondKindResiduals {
    std::array<double, 4> r{};          // corner mass, middle mass, inner mass, sum continuity at b
    double continuity_check_at_c = 0.0; // dependent condition, evaluated as a check
};

/// Residuals with the paper's symbol roles: m_inner spans [-c, c], m_split has
/// the corners. Throws on the sine pole at b.
SecondKindResiduals second_kind_residuals(double b, double c, double d, double amplitude,
                                          double p, double m_inner, double m_split,
                                          double epsilon);

/// Stable family member only: rejects roots whose split species dips negative
/// at b or whose edge velocity at c points inward.
std::optional<SecondKindProfile> solve_second_kind(double p, double m1, double m2,
                                                   double epsilon);

/// Algebraic root regardless of admissibility; the envelope search reads the
/// sign of split_at_b / edge_velocity_at_c off these.
std::optional<SecondKindProfile> second_kind_root(double p, double m1, double m2,
                                                  double epsilon);

struct EnvelopeRange {
    double p_min = 0.0;
    double p_max = 0.0;
    double epsilon = 0.0;
};

/// Envelope of the second-kind family: p_min where the split species' inner
/// density reaches zero at b, p_max where its edge velocity at c changes sign.
/// Empty when no stable member exists at this epsilon.
std::optional<EnvelopeRange> envelope_range(double m1, double m2, double epsilon);

struct BifurcationScan {
    std::vector<double> eps_grid;
    std::vector<char> batman_exists;
    std::vector<char> second_kind_exists;
    std::optional<double> eps1;  // smallest eps with a second-kind state
    std::optional<double> eps2;  // largest eps with a Batman state
};

/// For each epsilon in the grid, attempt both constructions. For m1 < m2 the
/// Batman system is solved with the species roles exchanged (the model is
/// symmetric under swapping the species).
BifurcationScan bifurcation_scan(double m1, double m2, double eps_lo, double eps_hi, int steps);

}  // namespace crossdiff
