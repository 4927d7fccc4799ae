#include "crossdiff/analytic_ar.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace crossdiff {

namespace {

void require(bool cond, const char* inequality) {
    if (!cond) {
        std::ostringstream msg;
        msg << "constraint violated: " << inequality;
        throw std::invalid_argument(msg.str());
    }
}

double cbrt_(double x) { return std::cbrt(x); }

}  // namespace

SegregatedProfile segregated_state(double m1, double m2, double M2, double epsilon) {
    require(m1 > 0.0 && m2 > 0.0, "m1, m2 > 0");
    require(epsilon > 0.0, "epsilon > 0");
    SegregatedProfile s;
    s.m1 = m1;
    s.m2 = m2;
    s.M2 = M2;
    s.epsilon = epsilon;
    s.c = cbrt_(1.5 * epsilon);
    s.b = (0.5 * cbrt_(6.0 * epsilon) * m2 + M2 - m1) / m2;
    s.a = (-m2 * s.b + 2.0 * M2 - 2.0 * m1) / m2;
    s.d = (-0.5 * cbrt_(6.0 * epsilon) * m2 + M2 + m1) / m2;
    s.e = (-m2 * s.d + 2.0 * M2 + 2.0 * m1) / m2;
    require(s.a < s.b, "a < b");
    require(s.b <= -s.c, "b <= -c (left eta bump clear of rho; epsilon or M2 too large)");
    require(s.c <= s.d, "c <= d (right eta bump clear of rho; epsilon or M2 too large)");
    require(s.d < s.e, "d < e");
    return s;
}

std::pair<double, double> SegregatedProfile::eval(double x) const {
    double rho = 0.0, eta = 0.0;
    if (std::abs(x) <= c) rho = -0.5 * m1 / epsilon * (x * x - c * c);
    if (x >= a && x <= b)
        eta = -0.5 * m2 / epsilon * (x * x - a * a) + (M2 - m1) / epsilon * (x - a);
    else if (x >= d && x <= e)
        eta = -0.5 * m2 / epsilon * (x * x - e * e) + (M2 + m1) / epsilon * (x - e);
    return {rho, eta};
}

AnalyticProfile SegregatedProfile::profile() const {
    AnalyticProfile p;
    auto self = *this;
    p.rho = [self](double x) { return self.eval(x).first; };
    p.eta = [self](double x) { return self.eval(x).second; };
    p.rho_support = {{-c, c}};
    p.eta_support = {{a, b}, {d, e}};
    p.breakpoints = {a, b, -c, c, d, e};
    return p;
}

double critical_epsilon(double m1, double m2) {
    require(m1 > 0.0 && m2 > 0.0, "m1, m2 > 0");
    return (4.0 / 9.0) * m1 * m1 * m1 * (cbrt_(2.0) - 1.0) / (m2 * m2 * m2);
}

CriticalValues max_M2(double m1, double m2, double epsilon) {
    require(m1 > 0.0 && m2 > 0.0, "m1, m2 > 0");
    require(epsilon > 0.0, "epsilon > 0");
    CriticalValues out;
    out.eps_c = critical_epsilon(m1, m2);
    out.M2_max = -0.5 * m2 * cbrt_(epsilon) * (cbrt_(12.0) + cbrt_(6.0)) + m1;
    return out;
}

DiracLimit vanishing_diffusion_limit(double m1, double m2, double M2) {
    require(m1 > 0.0 && m2 > 0.0, "m1, m2 > 0");
    require(std::abs(M2) < m1, "|M2| < m1");
    DiracLimit out;
    out.rho_location = 0.0;
    out.rho_weight = m1;
    const double y1 = (M2 - m1) / m2;
    const double y2 = (M2 + m1) / m2;
    out.eta_locations = {y1, y2};
    out.eta_weights = {0.5 * m2, 0.5 * m2};
    // Stationarity of the limiting particle system (X = 0 between Y1 < 0 < Y2):
    //   X'  = -(m2/2) sgn(X - Y1) - (m2/2) sgn(X - Y2)
    //   Y1' = -(m2/2) (Y1 - Y2) + m1 sgn(Y1 - X)
    //   Y2' = -(m2/2) (Y2 - Y1) + m1 sgn(Y2 - X)
    auto sgn = [](double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); };
    const double x = out.rho_location;
    out.particle_residuals[0] = -0.5 * m2 * sgn(x - y1) - 0.5 * m2 * sgn(x - y2);
    out.particle_residuals[1] = -0.5 * m2 * (y1 - y2) + m1 * sgn(y1 - x);
    out.particle_residuals[2] = -0.5 * m2 * (y2 - y1) + m1 * sgn(y2 - x);
    return out;
}

TwoPulseProfile two_pulse(double m, double epsilon, double x0) {
    require(m > 0.0, "m > 0");
    require(epsilon > 0.0, "epsilon > 0");
    TwoPulseProfile p;
    p.m = m;
    p.epsilon = epsilon;
    p.a = cbrt_(1.5 * epsilon);
    p.x0 = x0;
    p.v = m;
    require(x0 >= 2.0 * p.a, "x0 >= 2a (pulses must not overlap)");
    return p;
}

std::pair<double, double> TwoPulseProfile::eval(double z) const {
    auto bump = [&](double center) {
        const double u = z - center;
        if (std::abs(u) > a) return 0.0;
        return -0.5 * m / epsilon * (u * u - a * a);
    };
    return {bump(-x0), bump(0.0)};
}

AnalyticProfile TwoPulseProfile::profile() const {
    AnalyticProfile p;
    auto self = *this;
    p.rho = [self](double z) { return self.eval(z).first; };
    p.eta = [self](double z) { return self.eval(z).second; };
    p.rho_support = {{-x0 - a, -x0 + a}};
    p.eta_support = {{-a, a}};
    p.breakpoints = {-x0 - a, -x0 + a, -a, a};
    p.speed = v;
    return p;
}

double adjacent_pulse_support(double epsilon) {
    require(epsilon > 0.0, "epsilon > 0");
    return cbrt_(12.0 * epsilon);
}

ThreePulseProfile three_pulse(double m, double mL, double mR, double M2, double epsilon) {
    require(m > 0.0, "m > 0");
    require(mL >= 0.0 && mR >= 0.0 && mL + mR > 0.0, "mL, mR >= 0, mL + mR > 0");
    require(epsilon > 0.0, "epsilon > 0");
    ThreePulseProfile p;
    p.m = m;
    p.mL = mL;
    p.mR = mR;
    p.M2 = M2;
    p.epsilon = epsilon;
    p.v = mR - mL;
    p.c = cbrt_(1.5 * epsilon);
    p.b = (cbrt_(1.5 * epsilon * m * m * mL) + M2 - m - p.v) / m;
    p.a = (-m * p.b + 2.0 * M2 - 2.0 * m - 2.0 * p.v) / m;
    p.d = (-cbrt_(1.5 * epsilon * m * m * mR) + M2 + m - p.v) / m;
    p.e = (-m * p.d + 2.0 * M2 + 2.0 * m - 2.0 * p.v) / m;
    require(p.a <= p.b, "a <= b");
    if (mL > 0.0) require(p.b <= -p.c, "b <= -c (left pulse clear of rho)");
    if (mR > 0.0) require(p.c <= p.d, "c <= d (right pulse clear of rho)");
    require(p.d <= p.e, "d <= e");
    return p;
}

std::pair<double, double> ThreePulseProfile::eval(double z) const {
    double rho = 0.0, eta = 0.0;
    if (std::abs(z) <= c) rho = -0.5 * m / epsilon * (z * z - c * c);
    if (mL > 0.0 && z >= a && z <= b)
        eta = -0.5 * m / epsilon * (z * z - a * a) + (M2 - m - v) / epsilon * (z - a);
    else if (mR > 0.0 && z >= d && z <= e)
        eta = -0.5 * m / epsilon * (z * z - e * e) + (M2 + m - v) / epsilon * (z - e);
    return {rho, eta};
}

AnalyticProfile ThreePulseProfile::profile() const {
    AnalyticProfile p;
    auto self = *this;
    p.rho = [self](double z) { return self.eval(z).first; };
    p.eta = [self](double z) { return self.eval(z).second; };
    p.rho_support = {{-c, c}};
    p.eta_support.clear();
    if (mL > 0.0) p.eta_support.push_back({a, b});
    if (mR > 0.0) p.eta_support.push_back({d, e});
    p.breakpoints = {a, b, -c, c, d, e};
    p.speed = v;
    return p;
}

M2Range three_pulse_M2_range(double m, double mL, double mR, double epsilon) {
    require(m > 0.0, "m > 0");
    require(mL >= 0.0 && mR >= 0.0, "mL, mR >= 0");
    require(epsilon > 0.0, "epsilon > 0");
    const double v = mR - mL;
    // Touching conditions of the segregation ordering: b = -c bounds M2 from
    // above, c = d from below. (The source material prints these with the
    // labels exchanged, which would make the interval empty; substitute-back
    // fixes the assignment.)
    M2Range out;
    out.M2_max = m + v - 0.5 * cbrt_(12.0 * epsilon) * m - 0.5 * cbrt_(12.0 * mL * epsilon * m * m);
    out.M2_min = -m + v + 0.5 * cbrt_(12.0 * epsilon) * m + 0.5 * cbrt_(12.0 * mR * epsilon * m * m);
    return out;
}

}  // namespace crossdiff
