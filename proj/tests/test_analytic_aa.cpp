#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <random>

#include "crossdiff/analytic_aa.hpp"
#include "crossdiff/quadrature.hpp"
#include "crossdiff/steady_check.hpp"

using namespace crossdiff;

namespace {

// Independently solved reference roots (high-precision external solve).
constexpr double kBatmanB = 0.12729364911117715;
constexpr double kBatmanC = 0.52287886794550522;
constexpr double kBatmanU2 = 1.4172662127464027;
constexpr double kOverlapB = 1.1322677252728851;
constexpr double kOverlapU2 = 2.3551147853640603;
// second-kind root at eps=1.7, masses (0.1, 0.6), p=0.4
constexpr double kSkB = 0.54515252267325427;
constexpr double kSkC = 1.1168771401297806;
constexpr double kSkD = 1.4216644484037501;
constexpr double kSkAmp = 0.73117943487443804;

}  // namespace

TEST_CASE("batman_residuals: collapse at m1 = m2 and off-locus points") {
    const auto r_eq = batman_residuals(0.7, 0.7, 1.0, 1.0, 0.5);
    CHECK(r_eq[0] == 0.0);

    const auto r_off = batman_residuals(0.2, 0.6, 0.6, 0.1, 0.12);
    CHECK((std::abs(r_off[0]) > 1e-8 || std::abs(r_off[1]) > 1e-8));

    CHECK_THROWS_AS(batman_residuals(-0.1, 0.5, 1.0, 0.5, 0.1), std::invalid_argument);
    // cotangent pole: b/sqrt(eps) = pi
    CHECK_THROWS_AS(batman_residuals(M_PI, 4.0, 1.0, 0.5, 1.0), std::domain_error);
}

TEST_CASE("solve_batman reproduces the reference root") {
    const auto prof = solve_batman(0.6, 0.1, 0.12);
    REQUIRE(prof.has_value());
    CHECK(prof->b == doctest::Approx(kBatmanB).epsilon(1e-9));
    CHECK(prof->c == doctest::Approx(kBatmanC).epsilon(1e-9));
    CHECK(prof->u_hat2 == doctest::Approx(kBatmanU2).epsilon(1e-9));
    CHECK(std::abs(prof->r1) < 1e-10);
    CHECK(std::abs(prof->r2) < 1e-10);
    CHECK(prof->eta_at_b > 0.0);

    CHECK_THROWS_AS(solve_batman(1.0, 2.0, 0.5), std::invalid_argument);
}

TEST_CASE("solve_batman complete overlap at equal masses") {
    const auto prof = solve_batman(1.0, 1.0, 1.0);
    REQUIRE(prof.has_value());
    CHECK(std::abs(prof->b - prof->c) < 1e-10);
    CHECK(prof->b == doctest::Approx(kOverlapB).epsilon(1e-10));
    CHECK(prof->u_hat2 == doctest::Approx(kOverlapU2).epsilon(1e-10));
    // rho(0) = eta(0) = u2/2 - 1/2 > 0
    const auto [rho0, eta0] = prof->eval(0.0);
    CHECK(rho0 == doctest::Approx(0.5 * kOverlapU2 - 0.5).epsilon(1e-9));
    CHECK(rho0 == eta0);
    CHECK(rho0 > 0.0);
}

TEST_CASE("eval_batman: boundary zeros, evenness, sum continuity at b") {
    const auto prof = solve_batman(0.6, 0.1, 0.12);
    REQUIRE(prof.has_value());
    CHECK(prof->eval(prof->c).first == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(prof->eval(-prof->c).first == doctest::Approx(0.0).epsilon(1e-14));
    for (double x : {0.05, 0.11, 0.3, 0.5}) {
        CHECK(prof->eval(x).first == prof->eval(-x).first);
        CHECK(prof->eval(x).second == prof->eval(-x).second);
    }
    const double delta = 1e-9;
    const auto below = prof->eval(prof->b - delta);
    const auto above = prof->eval(prof->b + delta);
    CHECK(std::abs((below.first + below.second) - (above.first + above.second)) < 1e-6);
    // the exact one-sided limits agree to 1e-12
    const double se = std::sqrt(prof->epsilon);
    const double sum_in = prof->u_hat2 * std::cos(prof->b / se) - 0.5 * (0.6 + 0.1);
    const double sum_out = -0.5 * 0.6 / 0.12 * (prof->b * prof->b - prof->c * prof->c) -
                           (0.1 / 0.12) * (prof->b - prof->c);
    CHECK(std::abs(sum_in - sum_out) < 1e-12);
}

TEST_CASE("batman profile mass closure and first-moment symmetry") {
    const auto prof = solve_batman(0.6, 0.1, 0.12);
    REQUIRE(prof.has_value());
    const AnalyticProfile ap = prof->profile();
    const double mass_rho =
        integrate_adaptive(ap.rho, -prof->c, prof->c, 1e-12, ap.breakpoints);
    const double mass_eta =
        integrate_adaptive(ap.eta, -prof->b, prof->b, 1e-12, ap.breakpoints);
    CHECK(std::abs(mass_rho - 0.6) < 1e-8);
    CHECK(std::abs(mass_eta - 0.1) < 1e-8);
    const double m1_rho = integrate_adaptive([&](double x) { return x * ap.rho(x); }, -prof->c,
                                             prof->c, 1e-12, ap.breakpoints);
    CHECK(std::abs(m1_rho) < 1e-10);
}

TEST_CASE("small_eps_support: closed form and the m1 = m2 corner") {
    const AsymptoticSupport eq = small_eps_support(1.0, 1.0);
    CHECK(eq.b0 == doctest::Approx(M_PI / 2).epsilon(1e-14));
    CHECK(eq.c0 == doctest::Approx(M_PI / 2).epsilon(1e-14));

    const AsymptoticSupport s = small_eps_support(1.5, 1.0);
    // leading coefficients satisfy cot(b0) = c0 - b0 = sqrt((m1-m2)/m2)
    CHECK(std::cos(s.b0) / std::sin(s.b0) == doctest::Approx(s.c0 - s.b0).epsilon(1e-13));
    CHECK(s.c0 - s.b0 == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(s.b0 == doctest::Approx(0.95531661812450928).epsilon(1e-13));

    CHECK_THROWS_AS(small_eps_support(2.5, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(small_eps_support(0.9, 1.0), std::invalid_argument);
}

TEST_CASE("small_eps_support agrees with the exact root at eps = 1e-4") {
    const auto prof = solve_batman(1.5, 1.0, 1e-4);
    REQUIRE(prof.has_value());
    CHECK(std::max(std::abs(prof->r1), std::abs(prof->r2)) < 1e-12);
    const double se = 1e-2;
    // frozen external solve of the same system
    CHECK(prof->b / se == doctest::Approx(0.95187226097511323).epsilon(1e-7));
    CHECK(prof->c / se == doctest::Approx(1.6482483278501483).epsilon(1e-7));
    const AsymptoticSupport s = small_eps_support(1.5, 1.0);
    CHECK(std::abs(prof->b / se - s.b0) / s.b0 < 0.05);
    CHECK(std::abs(prof->c / se - s.c0) / s.c0 < 0.05);
}

TEST_CASE("second_kind_residuals at the reference root") {
    const auto res = second_kind_residuals(kSkB, kSkC, kSkD, kSkAmp, 0.4, 0.6, 0.1, 1.7);
    for (double r : res.r) CHECK(std::abs(r) < 1e-10);
    CHECK(std::abs(res.continuity_check_at_c) < 1e-8);
}

TEST_CASE("second-kind system degenerates to the Batman system at p=0, d=c") {
    // With the amplitude eliminated from the middle-mass condition, the inner
    // mass residual is r1/(3 eps) and the sum continuity residual is
    // -r2/(2 eps), for any (b, c).
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> bs(0.05, 0.3), cs(0.0, 0.5);
    const double m1 = 0.6, m2 = 0.1, eps = 0.12;
    const double se = std::sqrt(eps);
    for (int k = 0; k < 25; ++k) {
        const double b = bs(rng);
        const double c = b + cs(rng);
        const double amp = (m2 + m1 * b) / (se * std::sin(b / se));
        const auto res = second_kind_residuals(b, c, c, amp, 0.0, m1, m2, eps);
        const auto batman = batman_residuals(b, c, m1, m2, eps);
        CHECK(res.r[0] == 0.0);
        CHECK(std::abs(res.r[1]) < 1e-13);
        CHECK(3.0 * eps * res.r[2] == doctest::Approx(batman[0]).epsilon(1e-10));
        CHECK(-2.0 * eps * res.r[3] == doctest::Approx(batman[1]).epsilon(1e-10));
    }
}

TEST_CASE("solve_second_kind: reference root, role assignment, diagnostics") {
    const auto prof = solve_second_kind(0.4, 0.1, 0.6, 1.7);
    REQUIRE(prof.has_value());
    CHECK(prof->corners_are_rho);  // the lighter species carries the corners
    CHECK(prof->b == doctest::Approx(kSkB).epsilon(1e-8));
    CHECK(prof->c == doctest::Approx(kSkC).epsilon(1e-8));
    CHECK(prof->d == doctest::Approx(kSkD).epsilon(1e-8));
    CHECK(prof->amplitude == doctest::Approx(kSkAmp).epsilon(1e-8));
    for (double r : prof->residuals) CHECK(std::abs(r) < 1e-10);
    CHECK(prof->split_at_b == doctest::Approx(0.034096649072807575).epsilon(1e-6));
    CHECK(prof->edge_velocity_at_c == doctest::Approx(0.018438570064890276).epsilon(1e-6));

    // mass closure via quadrature
    const AnalyticProfile ap = prof->profile();
    double mass_rho = 0.0, mass_eta = 0.0;
    for (const auto& [lo, hi] : ap.rho_support)
        mass_rho += integrate_adaptive(ap.rho, lo, hi, 1e-12, ap.breakpoints);
    for (const auto& [lo, hi] : ap.eta_support)
        mass_eta += integrate_adaptive(ap.eta, lo, hi, 1e-12, ap.breakpoints);
    CHECK(std::abs(mass_rho - 0.1) < 1e-8);
    CHECK(std::abs(mass_eta - 0.6) < 1e-8);

    CHECK_THROWS_AS(solve_second_kind(1.5, 0.1, 0.6, 1.7), std::invalid_argument);
}

TEST_CASE("envelope_range at eps = 1.7 and rejection outside it") {
    const auto env = envelope_range(0.1, 0.6, 1.7);
    REQUIRE(env.has_value());
    CHECK(env->p_min > 0.0);
    CHECK(env->p_max < 1.0);
    CHECK(env->p_min < env->p_max);

    // binding conditions at the envelope edges
    const auto at_min = second_kind_root(env->p_min, 0.1, 0.6, 1.7);
    REQUIRE(at_min.has_value());
    CHECK(std::abs(at_min->split_at_b) < 1e-8);
    const auto at_max = second_kind_root(env->p_max, 0.1, 0.6, 1.7);
    REQUIRE(at_max.has_value());
    CHECK(std::abs(at_max->edge_velocity_at_c) < 1e-8);

    // outside the envelope the stable solve rejects
    if (env->p_min > 0.05)
        CHECK(!solve_second_kind(0.5 * env->p_min, 0.1, 0.6, 1.7).has_value());
    if (env->p_max < 0.95)
        CHECK(!solve_second_kind(0.5 * (env->p_max + 1.0), 0.1, 0.6, 1.7).has_value());
}

TEST_CASE("verify_steady_state: Batman balance constants via quadrature") {
    const auto prof = solve_batman(0.6, 0.1, 0.12);
    REQUIRE(prof.has_value());
    const ModelParams params = attractive_attractive_params(0.12);
    const SteadyStateResidual res = verify_steady_state(prof->profile(), params);
    CHECK(res.max_deviation < 1e-6);
    // frozen constants from an independent quadrature of the closed form
    CHECK(res.c1 == doctest::Approx(0.15226281099404673).epsilon(1e-7));
    CHECK(res.c2 == doctest::Approx(0.25510531388559815).epsilon(1e-7));

    // zero profile
    AnalyticProfile zero;
    zero.rho = [](double) { return 0.0; };
    zero.eta = [](double) { return 0.0; };
    const SteadyStateResidual zres = verify_steady_state(zero, params);
    CHECK(zres.max_deviation == 0.0);
    CHECK(zres.c1 == 0.0);
    CHECK(zres.c2 == 0.0);

    // perturbation sensitivity: scaling rho by 1.01 breaks the balance
    AnalyticProfile scaled = prof->profile();
    auto base_rho = scaled.rho;
    scaled.rho = [base_rho](double x) { return 1.01 * base_rho(x); };
    CHECK(verify_steady_state(scaled, params).max_deviation > 1e-3);
}

TEST_CASE("verify_steady_state: second-kind profile balances on every component") {
    const auto prof = solve_second_kind(0.4, 0.1, 0.6, 1.7);
    REQUIRE(prof.has_value());
    const SteadyStateResidual res =
        verify_steady_state(prof->profile(), attractive_attractive_params(1.7));
    CHECK(res.max_deviation < 1e-6);
}

TEST_CASE("bifurcation scan: coexistence window for masses (0.1, 0.6)") {
    const BifurcationScan scan = bifurcation_scan(0.1, 0.6, 0.5, 3.0, 11);
    REQUIRE(scan.eps1.has_value());
    REQUIRE(scan.eps2.has_value());
    CHECK(*scan.eps1 <= *scan.eps2);
    // below eps1 only Batman, above eps2 only second kind
    for (std::size_t k = 0; k < scan.eps_grid.size(); ++k) {
        if (scan.eps_grid[k] < *scan.eps1) {
            CHECK(scan.batman_exists[k]);
            CHECK(!scan.second_kind_exists[k]);
        }
        if (scan.eps_grid[k] > *scan.eps2) {
            CHECK(!scan.batman_exists[k]);
            CHECK(scan.second_kind_exists[k]);
        }
    }
}

TEST_CASE("envelope p_min is non-increasing across the window") {
    std::vector<double> eps_values{1.3, 1.7, 2.1, 2.5};
    std::vector<double> p_mins;
    for (double eps : eps_values) {
        const auto env = envelope_range(0.1, 0.6, eps);
        if (env) p_mins.push_back(env->p_min);
    }
    REQUIRE(p_mins.size() >= 3);
    for (std::size_t k = 1; k < p_mins.size(); ++k) CHECK(p_mins[k] <= p_mins[k - 1] + 1e-6);
}
