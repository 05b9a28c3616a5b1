#include "swtl/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "swtl/errors.hpp"

namespace swtl {

double ellipsoid_factor_g(double k_tot, double thickness) {
    double x = thickness * std::sqrt(k_tot);
    // Below the cutoff the direct form loses every significant digit to
    // cancellation; two series terms keep 1e-12 relative accuracy there.
    if (x < 1e-6) return x / 2.0 - x * x / 6.0;
    return 1.0 + std::expm1(-x) / x;
}

double dipole_factor_F(double k_tot, double g, double omega_h, double omega_m,
                       double lambda_ex, double theta_k, double theta_m) {
    double dt = theta_k - theta_m;
    double c = std::cos(dt);
    double s = std::sin(dt);
    double f = 1.0 - g * c * c;
    // The angular correction vanishes identically at dt = 0, so the operating
    // regime never evaluates the quotient (whose denominator is 0 at B = 0).
    if (s != 0.0) {
        double denom = omega_h + omega_m * lambda_ex * k_tot;
        if (denom == 0.0)
            throw singularity_error(
                "dipole factor diverges: omega_H + omega_M*lambda_ex*k_tot = 0");
        f += omega_m * g * (1.0 - g) * s * s / denom;
    }
    return f;
}

double dispersion_omega(double omega_h, double exchange_term, double dipole_term) {
    double a = omega_h + exchange_term;
    double radicand = a * (a + dipole_term);
    if (radicand < 0.0)
        throw evanescent_error("negative dispersion radicand", radicand);
    return std::sqrt(radicand);
}

DispersionPoint dispersion_point(double k, const FieldPoint& field,
                                 const MaterialStack& stack) {
    stack.validate();
    if (!std::isfinite(k) || k < 0.0)
        throw invalid_input("wavenumber must be finite and >= 0");
    if (!std::isfinite(field.b_eff))
        throw invalid_input("effective field must be finite");

    DispersionPoint pt;
    pt.k = k;
    double kt = stack.transverse_wavenumber();
    pt.k_tot = k * k + kt * kt;
    pt.g = ellipsoid_factor_g(pt.k_tot, stack.thickness);
    pt.lambda_ex = stack.lambda_ex();

    double omega_h = field.omega_h(stack);
    double omega_m = stack.omega_m();
    pt.F = dipole_factor_F(pt.k_tot, pt.g, omega_h, omega_m, pt.lambda_ex,
                           stack.theta_k, stack.theta_m);
    double exchange = omega_m * pt.lambda_ex * pt.k_tot;
    try {
        pt.omega = dispersion_omega(omega_h, exchange, omega_m * pt.F);
    } catch (const evanescent_error& e) {
        std::ostringstream msg;
        msg << "no propagating mode at k = " << k << " rad/m, B_eff = "
            << field.b_eff << " T";
        throw evanescent_error(msg.str(), e.radicand());
    }
    return pt;
}

double omega_of_k(double k, const FieldPoint& field, const MaterialStack& stack) {
    return dispersion_point(k, field, stack).omega;
}

namespace roots {

std::vector<double> find_roots(const std::function<std::optional<double>(double)>& fn,
                               double target, double lo, double hi, int grid_points,
                               bool log_spaced, double rel_tol) {
    if (!(lo < hi)) throw invalid_input("root bracket requires lo < hi");
    if (log_spaced && lo <= 0.0)
        throw invalid_input("log-spaced bracket requires lo > 0");
    if (grid_points < 2) throw invalid_input("root grid needs at least 2 points");

    auto grid_x = [&](int i) {
        double t = static_cast<double>(i) / (grid_points - 1);
        if (log_spaced) return lo * std::pow(hi / lo, t);
        return lo + (hi - lo) * t;
    };

    std::vector<double> roots;
    double prev_x = 0.0;
    std::optional<double> prev_f;
    for (int i = 0; i < grid_points; ++i) {
        double x = grid_x(i);
        std::optional<double> value = fn(x);
        std::optional<double> f;
        if (value) f = *value - target;

        if (f && *f == 0.0) {
            roots.push_back(x);
        } else if (f && prev_f && *prev_f != 0.0 && (*prev_f < 0.0) != (*f < 0.0)) {
            double a = prev_x;
            double b = x;
            double fa = *prev_f;
            while (b - a > rel_tol * std::abs(b)) {
                double mid = 0.5 * (a + b);
                if (mid <= a || mid >= b) break;
                std::optional<double> vm = fn(mid);
                if (!vm) {
                    // Undefined pockets sit below the propagating band in
                    // every caller, so the root lies above the midpoint.
                    a = mid;
                    continue;
                }
                double fm = *vm - target;
                if (fm == 0.0) {
                    a = b = mid;
                    break;
                }
                if ((fa < 0.0) == (fm < 0.0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        prev_x = x;
        prev_f = f;
    }

    std::sort(roots.begin(), roots.end());
    // Exact grid hits can re-emerge from the neighbouring cells; collapse
    // anything closer than the refinement resolution.
    std::vector<double> unique;
    for (double r : roots) {
        if (unique.empty() || r - unique.back() > 4.0 * rel_tol * std::abs(r))
            unique.push_back(r);
    }
    return unique;
}

} // namespace roots

double k_of_omega(double frequency_hz, const FieldPoint& field,
                  const MaterialStack& stack, const RootBracket& bracket) {
    stack.validate();
    if (!std::isfinite(frequency_hz) || frequency_hz <= 0.0)
        throw invalid_input("frequency must be finite and positive");
    if (!(bracket.k_min > 0.0) || !(bracket.k_min < bracket.k_max))
        throw invalid_input("wavenumber bracket requires 0 < k_min < k_max");
    if (bracket.grid_points < 64)
        throw invalid_input("wavenumber bracket needs at least 64 grid points");

    double omega_target = 2.0 * std::numbers::pi * frequency_hz;
    int valid_points = 0;
    double omega_min = std::numeric_limits<double>::infinity();
    auto fn = [&](double k) -> std::optional<double> {
        try {
            double w = omega_of_k(k, field, stack);
            ++valid_points;
            omega_min = std::min(omega_min, w);
            return w;
        } catch (const evanescent_error&) {
            return std::nullopt;
        }
    };

    auto ks = roots::find_roots(fn, omega_target, bracket.k_min, bracket.k_max,
                                bracket.grid_points, true, 1e-12);
    if (ks.size() == 1) return ks.front();

    std::ostringstream msg;
    if (ks.empty()) {
        msg << "no wavenumber in [" << bracket.k_min << ", " << bracket.k_max
            << "] rad/m reaches f = " << frequency_hz / 1e9 << " GHz at B_eff = "
            << field.b_eff << " T";
        if (valid_points == 0)
            msg << " (the whole bracket is evanescent)";
        else if (omega_target < omega_min)
            msg << " (band floor is " << omega_min / (2.0 * std::numbers::pi * 1e9)
                << " GHz)";
        throw no_root_error(msg.str());
    }
    msg << ks.size() << " wavenumbers match f = " << frequency_hz / 1e9
        << " GHz at B_eff = " << field.b_eff << " T; narrow the bracket";
    throw ambiguous_root_error(msg.str(), ks);
}

} // namespace swtl
