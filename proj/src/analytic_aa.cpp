#include "crossdiff/analytic_aa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crossdiff/newton.hpp"

namespace crossdiff {

namespace {

constexpr double kPi = 3.14159265358979323846;

double cot(double x) { return std::cos(x) / std::sin(x); }

void check_masses(double m1, double m2) {
    if (!(m2 > 0.0) || !(m1 > 0.0))
        throw std::invalid_argument("masses must be positive");
}

}  // namespace

std::array<double, 2> batman_residuals(double b, double c, double m1, double m2,
                                       double epsilon) {
    if (!(b > 0.0) || !(c >= b)) throw std::invalid_argument("batman_residuals: need 0 < b <= c");
    const double se = std::sqrt(epsilon);
    const double arg = b / se;
    if (std::abs(std::sin(arg)) < 1e-12)
        throw std::domain_error("batman_residuals: cotangent pole at b/sqrt(eps) = k*pi");
    const double r1 = 3.0 * epsilon * m1 + 3.0 * epsilon * m2 * b -
                      3.0 * epsilon * (m2 + m1 * b) -
                      (c - b) * (c - b) * (3.0 * m2 + 2.0 * c * m1 + m1 * b);
    const double r2 = m1 * (c * c - b * b) + epsilon * (m1 + m2) + 2.0 * m2 * (c - b) -
                      2.0 * se * (m2 + m1 * b) * cot(arg);
    return {r1, r2};
}

namespace {

double batman_u_hat2(double b, double m1, double m2, double epsilon) {
    const double se = std::sqrt(epsilon);
    return (m2 + m1 * b) / (se * std::sin(b / se));
}

BatmanProfile make_batman(double b, double c, double m1, double m2, double epsilon) {
    BatmanProfile prof;
    prof.m1 = m1;
    prof.m2 = m2;
    prof.epsilon = epsilon;
    prof.b = b;
    prof.c = c;
    prof.u_hat2 = batman_u_hat2(b, m1, m2, epsilon);
    const auto r = batman_residuals(b, c, m1, m2, epsilon);
    prof.r1 = r[0];
    prof.r2 = r[1];
    prof.eta_at_b = 0.5 * prof.u_hat2 * std::cos(b / std::sqrt(epsilon)) - 0.5 * m1;
    return prof;
}

// Complete-overlap case m1 = m2: Eq. r1 forces b = c and the remaining
// equation is eps (m1+m2) = 2 sqrt(eps) (m2 + m1 b) cot(b/sqrt(eps)).
std::optional<double> solve_overlap_b(double m, double epsilon) {
    const double se = std::sqrt(epsilon);
    auto f = [&](double b) {
        return epsilon * 2.0 * m - 2.0 * se * (m + m * b) * cot(b / se);
    };
    // f < 0 near b = 0 (cot blows up), f -> +inf at the pole b = pi*se.
    double lo = 1e-9 * se, hi = (1.0 - 1e-12) * kPi * se;
    if (!(f(lo) < 0.0) || !(f(hi) > 0.0)) return std::nullopt;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::optional<BatmanProfile> solve_batman(double m1, double m2, double epsilon) {
    check_masses(m1, m2);
    if (!(epsilon > 0.0)) throw std::invalid_argument("solve_batman: epsilon must be positive");
    if (m1 < m2)
        throw std::invalid_argument(
            "solve_batman: requires m1 >= m2 (the first species is the wider one)");

    const double se = std::sqrt(epsilon);

    if (m1 == m2) {
        const auto b = solve_overlap_b(m1, epsilon);
        if (!b) return std::nullopt;
        BatmanProfile prof = make_batman(*b, *b, m1, m2, epsilon);
        if (prof.eta_at_b < -1e-10) return std::nullopt;
        return prof;
    }

    // Coarse residual grid scan over (b, c-b) for sign-change cells of both
    // equations, then damped Newton from each candidate cell.
    const int nb = 200, ns = 200;
    const double b_lo = 1e-4 * se, b_hi = (1.0 - 1e-6) * kPi * se;
    const double s_hi = 1.05 * std::sqrt(epsilon * (m1 - m2) / m2) + 1e-12;
    auto res_at = [&](double b, double s) { return batman_residuals(b, b + s, m1, m2, epsilon); };

    std::vector<std::array<double, 2>> grid((nb + 1) * (ns + 1));
    auto bval = [&](int i) { return b_lo + (b_hi - b_lo) * i / nb; };
    auto sval = [&](int j) { return s_hi * j / ns; };
    for (int i = 0; i <= nb; ++i)
        for (int j = 0; j <= ns; ++j) grid[i * (ns + 1) + j] = res_at(bval(i), sval(j));

    auto residual_fn = [&](const std::vector<double>& x) {
        const auto r = batman_residuals(x[0], x[0] + x[1], m1, m2, epsilon);
        return std::vector<double>{r[0], r[1]};
    };
    auto admissible = [&](const std::vector<double>& x) {
        return x[0] > 0.0 && x[0] < kPi * se && x[1] >= 0.0;
    };

    std::optional<BatmanProfile> best;
    for (int i = 0; i < nb; ++i) {
        for (int j = 0; j < ns; ++j) {
            const auto& r00 = grid[i * (ns + 1) + j];
            const auto& r10 = grid[(i + 1) * (ns + 1) + j];
            const auto& r01 = grid[i * (ns + 1) + j + 1];
            const auto& r11 = grid[(i + 1) * (ns + 1) + j + 1];
            bool change1 = false, change2 = false;
            for (int k = 0; k < 2; ++k) {
                const double lo = std::min({r00[k], r10[k], r01[k], r11[k]});
                const double hi = std::max({r00[k], r10[k], r01[k], r11[k]});
                (k == 0 ? change1 : change2) = (lo <= 0.0 && hi >= 0.0);
            }
            if (!change1 || !change2) continue;
            auto root = damped_newton(residual_fn,
                                      {0.5 * (bval(i) + bval(i + 1)), 0.5 * (sval(j) + sval(j + 1))},
                                      NewtonOptions{}, admissible);
            if (!root) continue;
            const double b = (*root)[0], c = (*root)[0] + (*root)[1];
            BatmanProfile prof = make_batman(b, c, m1, m2, epsilon);
            if (prof.eta_at_b < -1e-10) continue;  // narrow species would dip negative
            if (!best || std::max(std::abs(prof.r1), std::abs(prof.r2)) <
                             std::max(std::abs(best->r1), std::abs(best->r2)))
                best = prof;
        }
    }
    return best;
}

std::pair<double, double> BatmanProfile::eval(double x) const {
    const double ax = std::abs(x);
    if (ax > c) return {0.0, 0.0};
    const double se = std::sqrt(epsilon);
    if (ax > b)
        return {-0.5 * m1 / epsilon * (ax * ax - c * c) - m2 / epsilon * (ax - c), 0.0};
    const double core = 0.5 * u_hat2 * std::cos(ax / se);
    return {core - 0.5 * m2, core - 0.5 * m1};
}

AnalyticProfile BatmanProfile::profile() const {
    AnalyticProfile p;
    auto self = *this;
    p.rho = [self](double x) { return self.eval(x).first; };
    p.eta = [self](double x) { return self.eval(x).second; };
    p.rho_support = {{-c, c}};
    p.eta_support = {{-b, b}};
    p.breakpoints = {-c, -b, b, c};
    return p;
}

AsymptoticSupport small_eps_support(double m1, double m2) {
    check_masses(m1, m2);
    const double ratio = (m1 - m2) / m2;
    if (ratio < 0.0 || ratio > 1.0)
        throw std::invalid_argument("small_eps_support: need 0 <= (m1-m2)/m2 <= 1");
    const double root = std::sqrt(ratio);
    // Leading-order balance of the two support equations: the mass relation
    // gives (c0-b0)^2 = (m1-m2)/m2, the sum-continuity relation cot(b0)=c0-b0.
    AsymptoticSupport out;
    out.b0 = std::atan2(1.0, root);  // arccot
    out.c0 = root + out.b0;
    return out;
}

// ---------------------------------------------------------------------------
// Second-kind profiles.
// ---------------------------------------------------------------------------

SecondKindResiduals second_kind_residuals(double b, double c, double d, double amplitude,
                                          double p, double m_inner, double m_split,
                                          double epsilon) {
    if (!(b > 0.0) || !(c >= b) || !(d >= c))
        throw std::invalid_argument("second_kind_residuals: need 0 < b <= c <= d");
    const double se = std::sqrt(epsilon);
    const double arg = b / se;
    if (std::abs(std::sin(arg)) < 1e-12)
        throw std::domain_error("second_kind_residuals: sine pole at b/sqrt(eps) = k*pi");

    const double K = 0.5 * m_split * (d * d - c * c) + m_inner * (d - c);
    const double s = d - c;
    const double cb = c - b;

    SecondKindResiduals out;
    // Corner mass: p m_s = 2 int_c^d eta^R.
    out.r[0] = p * m_split - (s * s / (3.0 * epsilon)) * (m_split * (2.0 * d + c) + 3.0 * m_inner);
    // Middle mass of the split species.
    const double sin_term = amplitude * se * std::sin(arg);
    out.r[1] = (1.0 - p) * m_split - (sin_term - m_inner * b);
    // Inner-species mass over [-c, c].
    const double int_wing = (K * cb + (m_inner / 6.0) * cb * cb * (2.0 * c + b) +
                             0.5 * (1.0 - p) * m_split * cb * cb) /
                            epsilon;
    out.r[2] = m_inner - (2.0 * int_wing + sin_term - m_split * b);
    // Continuity of rho + eta at b.
    const double sigma_core = amplitude * std::cos(arg) - 0.5 * (m_inner + m_split);
    const double sigma_wing = (K + 0.5 * m_inner * (c * c - b * b) + (1.0 - p) * m_split * cb) /
                              epsilon;
    out.r[3] = sigma_core - sigma_wing;
    // Continuity at c holds identically for these branch formulas; evaluate it
    // anyway as a floating-point check of the condition count.
    const double inner_at_c = K / epsilon;
    const double corner_at_c = (0.5 * m_split * (d * d - c * c) + m_inner * (d - c)) / epsilon;
    out.continuity_check_at_c = inner_at_c - corner_at_c;
    return out;
}

namespace {

struct SecondKindRoles {
    double inner_mass;
    double split_mass;
    bool corners_are_rho;
};

SecondKindRoles second_kind_roles(double m1, double m2) {
    // The corner bumps belong to the lighter species: the stability condition
    // on the edge velocity at c rules out the opposite assignment.
    if (m1 < m2) return {m2, m1, true};
    return {m1, m2, false};
}

// Corner half-width s = d - c solving the corner-mass condition at given c;
// the left side is increasing in s, so bisection is safe.
double corner_width(double c, double p, double mI, double mS, double epsilon) {
    auto f = [&](double s) {
        const double d = c + s;
        return (s * s / (3.0 * epsilon)) * (mS * (2.0 * d + c) + 3.0 * mI) - p * mS;
    };
    double hi = std::cbrt(3.0 * epsilon * p * mS / (mS + mI)) + 1.0;
    while (f(hi) < 0.0) hi *= 2.0;
    double lo = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) < 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double middle_amplitude(double b, double p, double mI, double mS, double epsilon) {
    const double se = std::sqrt(epsilon);
    return ((1.0 - p) * mS + mI * b) / (se * std::sin(b / se));
}

SecondKindProfile package_second_kind(double b, double c, double d, double B, double p,
                                      double m1, double m2, double epsilon) {
    const SecondKindRoles roles = second_kind_roles(m1, m2);
    SecondKindProfile prof;
    prof.m1 = m1;
    prof.m2 = m2;
    prof.epsilon = epsilon;
    prof.b = b;
    prof.c = c;
    prof.d = d;
    prof.amplitude = B;
    prof.p = p;
    prof.corners_are_rho = roles.corners_are_rho;
    const auto res =
        second_kind_residuals(b, c, d, B, p, roles.inner_mass, roles.split_mass, epsilon);
    prof.residuals = res.r;
    prof.continuity_check_at_c = res.continuity_check_at_c;
    prof.split_at_b = 0.5 * B * std::cos(b / std::sqrt(epsilon)) - 0.5 * roles.inner_mass;
    prof.edge_velocity_at_c = (roles.inner_mass - roles.split_mass) * c - roles.inner_mass +
                              (1.0 - p) * roles.split_mass;
    return prof;
}

std::optional<SecondKindProfile> second_kind_root_impl(double p, double m1, double m2,
                                                       double epsilon) {
    const SecondKindRoles roles = second_kind_roles(m1, m2);
    const double mI = roles.inner_mass, mS = roles.split_mass;
    const double se = std::sqrt(epsilon);

    // Reduce to (b, c): the middle-mass condition fixes B(b) and the
    // corner-mass condition fixes d(c); scan the remaining two residuals.
    auto reduced = [&](double b, double c) {
        const double B = middle_amplitude(b, p, mI, mS, epsilon);
        const double d = c + corner_width(c, p, mI, mS, epsilon);
        const auto res = second_kind_residuals(b, c, d, B, p, mI, mS, epsilon);
        return std::array<double, 2>{res.r[2], res.r[3]};
    };

    const int nb = 90, nc = 90;
    const double b_lo = 1e-3 * se, b_hi = (1.0 - 1e-6) * kPi * se;
    const double span = 4.0 * std::max(1.0, se);
    auto bval = [&](int i) { return b_lo + (b_hi - b_lo) * i / nb; };
    auto cval = [&](double b, int j) { return b + 1e-6 + span * j / nc; };

    auto residual_fn = [&](const std::vector<double>& x) {
        const auto res = second_kind_residuals(x[0], x[1], x[2], x[3], p, mI, mS, epsilon);
        return std::vector<double>{res.r[0], res.r[1], res.r[2], res.r[3]};
    };
    auto admissible = [&](const std::vector<double>& x) {
        return x[0] > 0.0 && x[1] > x[0] && x[2] >= x[1] && x[0] < kPi * se;
    };

    std::optional<SecondKindProfile> best;
    std::vector<std::array<double, 2>> row(nc + 1), prev(nc + 1);
    for (int i = 0; i <= nb; ++i) {
        for (int j = 0; j <= nc; ++j) row[j] = reduced(bval(i), cval(bval(i), j));
        if (i > 0) {
            for (int j = 0; j < nc; ++j) {
                bool change1 = false, change2 = false;
                for (int k = 0; k < 2; ++k) {
                    const double lo =
                        std::min({prev[j][k], prev[j + 1][k], row[j][k], row[j + 1][k]});
                    const double hi =
                        std::max({prev[j][k], prev[j + 1][k], row[j][k], row[j + 1][k]});
                    (k == 0 ? change1 : change2) = (lo <= 0.0 && hi >= 0.0);
                }
                if (!change1 || !change2) continue;
                const double b0 = 0.5 * (bval(i - 1) + bval(i));
                const double c0 = 0.5 * (cval(b0, j) + cval(b0, j + 1));
                const double d0 = c0 + corner_width(c0, p, mI, mS, epsilon);
                const double B0 = middle_amplitude(b0, p, mI, mS, epsilon);
                auto root = damped_newton(residual_fn, {b0, c0, d0, B0}, NewtonOptions{},
                                          admissible);
                if (!root) continue;
                SecondKindProfile prof = package_second_kind((*root)[0], (*root)[1], (*root)[2],
                                                             (*root)[3], p, m1, m2, epsilon);
                double rmax = 0.0;
                for (double r : prof.residuals) rmax = std::max(rmax, std::abs(r));
                double bmax = 1.0;
                if (best) {
                    bmax = 0.0;
                    for (double r : best->residuals) bmax = std::max(bmax, std::abs(r));
                }
                if (!best || rmax < bmax) best = prof;
            }
        }
        std::swap(row, prev);
    }
    return best;
}

}  // namespace

std::optional<SecondKindProfile> solve_second_kind(double p, double m1, double m2,
                                                   double epsilon) {
    check_masses(m1, m2);
    if (!(epsilon > 0.0)) throw std::invalid_argument("solve_second_kind: epsilon must be > 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("solve_second_kind: p must lie in [0, 1]");
    auto root = second_kind_root_impl(p, m1, m2, epsilon);
    if (!root) return std::nullopt;
    if (root->split_at_b < -1e-10) return std::nullopt;       // density dips negative
    if (root->edge_velocity_at_c < -1e-10) return std::nullopt;  // perturbations feed inward
    return root;
}

std::optional<SecondKindProfile> second_kind_root(double p, double m1, double m2,
                                                  double epsilon) {
    check_masses(m1, m2);
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("second_kind_root: p must lie in [0, 1]");
    return second_kind_root_impl(p, m1, m2, epsilon);
}

std::pair<double, double> SecondKindProfile::eval(double x) const {
    const SecondKindRoles roles = second_kind_roles(m1, m2);
    const double mI = roles.inner_mass, mS = roles.split_mass;
    const double ax = std::abs(x);
    const double se = std::sqrt(epsilon);
    double inner = 0.0, split = 0.0;
    if (ax <= b) {
        const double core = 0.5 * amplitude * std::cos(ax / se);
        inner = core - 0.5 * mS;
        split = core - 0.5 * mI;
    } else if (ax <= c) {
        const double K = 0.5 * mS * (d * d - c * c) + mI * (d - c);
        inner = (K + 0.5 * mI * (c * c - ax * ax) + (1.0 - p) * mS * (c - ax)) / epsilon;
    } else if (ax <= d) {
        split = (0.5 * mS * (d * d - ax * ax) + mI * (d - ax)) / epsilon;
    }
    return roles.corners_are_rho ? std::make_pair(split, inner) : std::make_pair(inner, split);
}

AnalyticProfile SecondKindProfile::profile() const {
    AnalyticProfile out;
    auto self = *this;
    out.rho = [self](double x) { return self.eval(x).first; };
    out.eta = [self](double x) { return self.eval(x).second; };
    std::vector<std::pair<double, double>> inner_supp{{-c, c}};
    std::vector<std::pair<double, double>> split_supp{{-d, -c}, {-b, b}, {c, d}};
    if (corners_are_rho) {
        out.rho_support = split_supp;
        out.eta_support = inner_supp;
    } else {
        out.rho_support = inner_supp;
        out.eta_support = split_supp;
    }
    out.breakpoints = {-d, -c, -b, b, c, d};
    return out;
}

std::optional<EnvelopeRange> envelope_range(double m1, double m2, double epsilon) {
    check_masses(m1, m2);
    // Sample the root family over p, tracking the two envelope functions.
    const int np = 49;
    struct Sample {
        double p, split_at_b, edge_velocity;
    };
    std::vector<Sample> samples;
    for (int k = 1; k <= np; ++k) {
        const double p = static_cast<double>(k) / (np + 1);
        auto root = second_kind_root_impl(p, m1, m2, epsilon);
        if (root) samples.push_back({p, root->split_at_b, root->edge_velocity_at_c});
    }
    if (samples.empty()) return std::nullopt;

    auto bisect = [&](double p_lo, double p_hi, auto&& value) -> std::optional<double> {
        // value(p_lo) < 0 <= value(p_hi) or the reverse.
        auto at = [&](double p) -> std::optional<double> {
            auto root = second_kind_root_impl(p, m1, m2, epsilon);
            if (!root) return std::nullopt;
            return value(*root);
        };
        auto flo = at(p_lo), fhi = at(p_hi);
        if (!flo || !fhi || (*flo < 0.0) == (*fhi < 0.0)) return std::nullopt;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (p_lo + p_hi);
            auto fm = at(mid);
            if (!fm) return std::nullopt;
            if ((*fm < 0.0) == (*flo < 0.0)) {
                p_lo = mid;
                flo = fm;
            } else {
                p_hi = mid;
            }
        }
        return 0.5 * (p_lo + p_hi);
    };

    // p_min: split-species non-negativity at b binds from below.
    std::optional<double> p_min;
    if (samples.front().split_at_b >= 0.0) {
        p_min = samples.front().p;
    } else {
        for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
            if (samples[k].split_at_b < 0.0 && samples[k + 1].split_at_b >= 0.0) {
                p_min = bisect(samples[k].p, samples[k + 1].p,
                               [](const SecondKindProfile& r) { return r.split_at_b; });
                break;
            }
        }
    }
    // p_max: edge velocity at c binds from above.
    std::optional<double> p_max;
    if (samples.back().edge_velocity >= 0.0) {
        p_max = samples.back().p;
    } else {
        for (std::size_t k = 0; k + 1 < samples.size(); ++k) {
            if (samples[k].edge_velocity >= 0.0 && samples[k + 1].edge_velocity < 0.0) {
                p_max = bisect(samples[k].p, samples[k + 1].p,
                               [](const SecondKindProfile& r) { return r.edge_velocity_at_c; });
                break;
            }
        }
    }
    if (!p_min || !p_max || !(*p_min <= *p_max)) return std::nullopt;
    return EnvelopeRange{*p_min, *p_max, epsilon};
}

BifurcationScan bifurcation_scan(double m1, double m2, double eps_lo, double eps_hi, int steps) {
    check_masses(m1, m2);
    if (!(eps_lo > 0.0) || !(eps_hi > eps_lo) || steps < 2)
        throw std::invalid_argument("bifurcation_scan: invalid epsilon range");
    BifurcationScan scan;
    const double wide = std::max(m1, m2), narrow = std::min(m1, m2);
    for (int k = 0; k < steps; ++k) {
        const double eps = eps_lo + (eps_hi - eps_lo) * k / (steps - 1);
        scan.eps_grid.push_back(eps);
        bool batman = false;
        try {
            batman = solve_batman(wide, narrow, eps).has_value();
        } catch (const std::exception&) {
        }
        scan.batman_exists.push_back(batman);
        const bool second = envelope_range(m1, m2, eps).has_value();
        scan.second_kind_exists.push_back(second);
        if (second && !scan.eps1) scan.eps1 = eps;
        if (batman) scan.eps2 = eps;
    }
    return scan;
}

}  // namespace crossdiff
