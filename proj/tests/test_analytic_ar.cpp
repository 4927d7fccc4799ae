#include <doctest.h>

#include <stdexcept>
#include <cmath>

#include "crossdiff/analytic_ar.hpp"
#include "crossdiff/quadrature.hpp"
#include "crossdiff/steady_check.hpp"

using namespace crossdiff;

TEST_CASE("segregated_state: closed-form support points") {
    const SegregatedProfile s = segregated_state(1.0, 1.0, 0.0, 0.05);
    CHECK(s.c == doctest::Approx(std::cbrt(0.075)).epsilon(1e-14));
    CHECK(s.b == doctest::Approx(0.5 * std::cbrt(0.3) - 1.0).epsilon(1e-13));
    CHECK(s.a == doctest::Approx(-s.b - 2.0).epsilon(1e-13));
    CHECK(s.d == doctest::Approx(-s.b).epsilon(1e-13));
    CHECK(s.e == doctest::Approx(-s.a).epsilon(1e-13));
    // strictly segregated: positive gap between eta bumps and rho
    CHECK(-s.c - s.b > 0.0);

    // ordering constraints carry the failed inequality in the message
    CHECK_THROWS_WITH_AS(segregated_state(1.0, 1.0, 0.0, 2.0 / 3.0),
                         doctest::Contains("b <= -c"), std::invalid_argument);
    CHECK_THROWS_AS(segregated_state(1.0, 1.0, 5.0, 0.05), std::invalid_argument);
}

TEST_CASE("segregated_state at M2_max touches: b = -c") {
    const double eps = 0.05;
    const CriticalValues cv = max_M2(1.0, 1.0, eps);
    REQUIRE(cv.M2_max > 0.0);
    const SegregatedProfile s = segregated_state(1.0, 1.0, cv.M2_max, eps);
    CHECK(s.b == doctest::Approx(-s.c).epsilon(1e-12));
}

TEST_CASE("segregated profile: mass closure, half mass per eta bump, continuity") {
    const SegregatedProfile s = segregated_state(1.2, 0.8, 0.1, 0.03);
    const AnalyticProfile ap = s.profile();
    const double mass_rho = integrate_adaptive(ap.rho, -s.c, s.c, 1e-12);
    const double left = integrate_adaptive(ap.eta, s.a, s.b, 1e-12);
    const double right = integrate_adaptive(ap.eta, s.d, s.e, 1e-12);
    CHECK(std::abs(mass_rho - 1.2) < 1e-10);
    CHECK(std::abs(left - 0.4) < 1e-10);
    CHECK(std::abs(right - 0.4) < 1e-10);
    // densities vanish at their support endpoints (sum continuity when apart)
    for (double x : {s.a, s.b, s.d, s.e}) CHECK(std::abs(ap.eta(x)) < 1e-12);
    for (double x : {-s.c, s.c}) CHECK(std::abs(ap.rho(x)) < 1e-12);
    // eta first moment reproduces M2
    const double M2 = integrate_adaptive([&](double x) { return x * ap.eta(x); }, s.a, s.e,
                                         1e-12, ap.breakpoints);
    CHECK(M2 == doctest::Approx(0.1).epsilon(1e-9));
    // strict segregation: supports pairwise disjoint
    CHECK(s.a < s.b);
    CHECK(s.b < -s.c);
    CHECK(s.c < s.d);
    CHECK(s.d < s.e);
}

TEST_CASE("critical_epsilon and max_M2 are mutually consistent") {
    const double eps_c = critical_epsilon(1.0, 1.0);
    // frozen from the closed form
    CHECK(eps_c == doctest::Approx(0.11552046661994363).epsilon(1e-14));
    // cubic scaling in m1
    CHECK(critical_epsilon(2.0, 1.0) == doctest::Approx(8.0 * eps_c).epsilon(1e-13));
    // substituting eps_c makes the admissible M2 interval collapse
    CHECK(std::abs(max_M2(1.0, 1.0, eps_c).M2_max) < 1e-12);
    CHECK(max_M2(1.0, 1.0, 0.05).M2_max > 0.0);
    // independent route: b(eps_c, M2=0) + c(eps_c) = 0 (touching condition)
    const double b_touch = 0.5 * std::cbrt(6.0 * eps_c) - 1.0;
    CHECK(std::abs(b_touch + std::cbrt(1.5 * eps_c)) < 1e-12);
}

TEST_CASE("vanishing_diffusion_limit: atoms, weights, particle residuals") {
    const DiracLimit lim = vanishing_diffusion_limit(1.0, 1.0, 0.0);
    CHECK(lim.rho_location == 0.0);
    CHECK(lim.eta_locations[0] == doctest::Approx(-1.0));
    CHECK(lim.eta_locations[1] == doctest::Approx(1.0));
    CHECK(lim.eta_weights[0] == doctest::Approx(0.5));
    CHECK(lim.eta_weights[1] == doctest::Approx(0.5));
    for (double r : lim.particle_residuals) CHECK(r == 0.0);
    // atom separation 2 m1 / m2
    const DiracLimit lim2 = vanishing_diffusion_limit(1.4, 0.7, 0.3);
    CHECK(lim2.eta_locations[1] - lim2.eta_locations[0] ==
          doctest::Approx(2.0 * 1.4 / 0.7).epsilon(1e-14));
    for (double r : lim2.particle_residuals) CHECK(r == 0.0);

    CHECK_THROWS_AS(vanishing_diffusion_limit(1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("segregated supports collapse onto the Dirac atoms as eps -> 0") {
    const double m1 = 1.0, m2 = 1.0, M2 = 0.2;
    const SegregatedProfile s = segregated_state(m1, m2, M2, 1e-6);
    const DiracLimit lim = vanishing_diffusion_limit(m1, m2, M2);
    CHECK(std::abs(0.5 * (s.a + s.b) - lim.eta_locations[0]) < 1e-2);
    CHECK(std::abs(0.5 * (s.d + s.e) - lim.eta_locations[1]) < 1e-2);
    CHECK(s.e - s.d < 1e-1);
}

TEST_CASE("two_pulse: geometry, speed law, mass closure") {
    const TwoPulseProfile p = two_pulse(1.0, 2.0 / 3.0, 3.0);
    CHECK(p.a == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.v == 1.0);
    const AnalyticProfile ap = p.profile();
    const double mass = integrate_adaptive(ap.eta, -p.a, p.a, 1e-13);
    CHECK(std::abs(mass - 1.0) < 1e-12);
    const double mass_rho = integrate_adaptive(ap.rho, -p.x0 - p.a, -p.x0 + p.a, 1e-13);
    CHECK(std::abs(mass_rho - 1.0) < 1e-12);

    CHECK_THROWS_AS(two_pulse(1.0, 2.0 / 3.0, 1.5), std::invalid_argument);
}

TEST_CASE("adjacent pulse support and the touching identity") {
    CHECK(adjacent_pulse_support(1.0 / 12.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(adjacent_pulse_support(2.0 / 3.0) == doctest::Approx(2.0).epsilon(1e-14));
    for (double eps : {1e-4, 0.01, 0.1, 0.5, 1.0, 3.0, 17.0}) {
        CHECK(std::abs(adjacent_pulse_support(eps) - 2.0 * std::cbrt(1.5 * eps)) <=
              1e-14 * adjacent_pulse_support(eps));
    }
}

TEST_CASE("three_pulse: speed law and the reference configuration") {
    const M2Range range = three_pulse_M2_range(1.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0);
    // pick the midpoint so the ordering is strict
    const double M2 = 0.5 * (range.M2_min + range.M2_max);
    const ThreePulseProfile p = three_pulse(1.0, 1.0 / 3.0, 2.0 / 3.0, M2, 2.0 / 3.0);
    CHECK(p.v == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(p.c == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.a < p.b);
    CHECK(p.b <= -p.c);
    CHECK(p.c <= p.d);
    CHECK(p.d < p.e);
    // masses by quadrature
    const AnalyticProfile ap = p.profile();
    CHECK(std::abs(integrate_adaptive(ap.eta, p.a, p.b, 1e-13) - 1.0 / 3.0) < 1e-10);
    CHECK(std::abs(integrate_adaptive(ap.eta, p.d, p.e, 1e-13) - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(integrate_adaptive(ap.rho, -p.c, p.c, 1e-13) - 1.0) < 1e-10);
}

TEST_CASE("three_pulse reduction: equal pulse masses give the segregated state") {
    const double eps = 0.05, M2 = 0.1;
    const ThreePulseProfile p3 = three_pulse(1.0, 0.5, 0.5, M2, eps);
    CHECK(p3.v == 0.0);
    const SegregatedProfile seg = segregated_state(1.0, 1.0, M2, eps);
    CHECK(p3.a == doctest::Approx(seg.a).epsilon(1e-13));
    CHECK(p3.b == doctest::Approx(seg.b).epsilon(1e-13));
    CHECK(p3.c == doctest::Approx(seg.c).epsilon(1e-13));
    CHECK(p3.d == doctest::Approx(seg.d).epsilon(1e-13));
    CHECK(p3.e == doctest::Approx(seg.e).epsilon(1e-13));
    for (double x = -1.6; x <= 1.6; x += 0.01) {
        const auto [r3, e3] = p3.eval(x);
        const auto [rs, es] = seg.eval(x);
        CHECK(std::abs(r3 - rs) <= 1e-12);
        CHECK(std::abs(e3 - es) <= 1e-12);
    }
}

TEST_CASE("three_pulse reduction: vanishing left pulse gives a translated two-pulse") {
    const double eps = 2.0 / 3.0, m = 1.0, M2 = 3.0;
    const ThreePulseProfile p3 = three_pulse(m, 0.0, m, M2, eps);
    CHECK(p3.v == doctest::Approx(m));
    CHECK(p3.a == doctest::Approx(p3.b).epsilon(1e-13));  // left part degenerate
    const double x0 = M2 / m;
    const TwoPulseProfile p2 = two_pulse(m, eps, x0);
    // the three-pulse frame is centered on rho; shift by x0 to the two-pulse frame
    for (double z = -2.5; z <= 4.5; z += 0.01) {
        const auto [r3, e3] = p3.eval(z);
        const auto [r2, e2] = p2.eval(z - x0);
        CHECK(std::abs(r3 - r2) <= 1e-12);
        CHECK(std::abs(e3 - e2) <= 1e-12);
    }
}

TEST_CASE("three_pulse_M2_range: endpoints produce touching configurations") {
    const double m = 1.0, eps = 0.04;
    for (auto [mL, mR] : {std::pair{0.5, 0.5}, std::pair{1.0 / 3.0, 2.0 / 3.0},
                          std::pair{0.7, 0.3}}) {
        const M2Range range = three_pulse_M2_range(m, mL, mR, eps);
        CHECK(range.M2_min < range.M2_max);
        const ThreePulseProfile hi = three_pulse(m, mL, mR, range.M2_max, eps);
        CHECK(std::abs(hi.b + hi.c) < 1e-10);  // b = -c at the upper endpoint
        const ThreePulseProfile lo = three_pulse(m, mL, mR, range.M2_min, eps);
        CHECK(std::abs(lo.c - lo.d) < 1e-10);  // c = d at the lower endpoint
    }
    // symmetric pulses: the window matches the steady-state one
    const M2Range sym = three_pulse_M2_range(1.0, 0.5, 0.5, 0.04);
    const CriticalValues cv = max_M2(1.0, 1.0, 0.04);
    CHECK(sym.M2_max == doctest::Approx(cv.M2_max).epsilon(1e-13));
    CHECK(sym.M2_min == doctest::Approx(-cv.M2_max).epsilon(1e-13));
    // one-sided mass limits stay finite and ordered
    const M2Range no_r = three_pulse_M2_range(1.0, 1.0, 0.0, 0.04);
    CHECK(std::isfinite(no_r.M2_min));
    CHECK(std::isfinite(no_r.M2_max));
    const M2Range no_l = three_pulse_M2_range(1.0, 0.0, 1.0, 0.04);
    CHECK(no_l.M2_min < no_l.M2_max);
}

TEST_CASE("verify_steady_state: segregated profile balances by quadrature") {
    const SegregatedProfile s = segregated_state(1.0, 1.0, 0.0, 0.05);
    const SteadyStateResidual res =
        verify_steady_state(s.profile(), attractive_repulsive_params(0.05));
    CHECK(res.max_deviation < 1e-6);
}

TEST_CASE("verify_comoving_state: pulses balance, wrong speed is detected") {
    const ModelParams params = attractive_repulsive_params(2.0 / 3.0);

    const TwoPulseProfile p2 = two_pulse(1.0, 2.0 / 3.0, 3.0);
    CHECK(verify_comoving_state(p2.profile(), params).max_deviation < 1e-6);

    AnalyticProfile wrong = p2.profile();
    wrong.speed = 0.5;  // v = m/2 violates the balance
    CHECK(verify_comoving_state(wrong, params).max_deviation > 1e-3);

    const M2Range range = three_pulse_M2_range(1.0, 1.0 / 3.0, 2.0 / 3.0, 2.0 / 3.0);
    const ThreePulseProfile p3 =
        three_pulse(1.0, 1.0 / 3.0, 2.0 / 3.0, 0.5 * (range.M2_min + range.M2_max), 2.0 / 3.0);
    CHECK(verify_comoving_state(p3.profile(), params).max_deviation < 1e-6);

    AnalyticProfile zero;
    zero.rho = [](double) { return 0.0; };
    zero.eta = [](double) { return 0.0; };
    CHECK(verify_comoving_state(zero, params).max_deviation == 0.0);
}
