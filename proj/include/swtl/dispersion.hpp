#pragma once
// Analytical dispersion relation for dipole-exchange spin waves in a thin
// waveguide, and its numerical inversion (frequency -> wavenumber).
//
//   omega(k) = sqrt((omega_H + omega_M*lambda_ex*k_tot)
//                 * (omega_H + omega_M*lambda_ex*k_tot + omega_M*F))
//
// with k_tot = k^2 + (mode*pi/width)^2, omega_H = gamma*B_eff and
// omega_M = gamma*mu0*Ms.

#include <functional>
#include <optional>
#include <vector>

#include "swtl/material.hpp"

namespace swtl {

struct DispersionPoint {
    double k = 0.0;         // rad/m
    double omega = 0.0;     // rad/s
    double k_tot = 0.0;     // rad^2/m^2
    double g = 0.0;         // thickness (ellipsoid) factor, in [0, 1)
    double F = 0.0;         // dipole factor
    double lambda_ex = 0.0; // m^2
};

// g = 1 - (1 - exp(-x))/x with x = thickness*sqrt(k_tot); evaluated by the
// series x/2 - x^2/6 below x = 1e-6.
double ellipsoid_factor_g(double k_tot, double thickness);

// F = 1 - g*cos^2(dt) + omega_m*g*(1-g)*sin^2(dt) / (omega_h + omega_m*lambda_ex*k_tot)
// with dt = theta_k - theta_m. Reduces to 1 - g in the operating regime
// theta_k = theta_m = 0.
double dipole_factor_F(double k_tot, double g, double omega_h, double omega_m,
                       double lambda_ex, double theta_k, double theta_m);

// omega = sqrt((omega_h + exchange)(omega_h + exchange + dipole)). Kept as a
// separate entry point so degenerate parameter sets (omega_m = 0) stay
// reachable in tests. Throws evanescent_error when the radicand is negative.
double dispersion_omega(double omega_h, double exchange_term, double dipole_term);

double omega_of_k(double k, const FieldPoint& field, const MaterialStack& stack);
DispersionPoint dispersion_point(double k, const FieldPoint& field,
                                 const MaterialStack& stack);

struct RootBracket {
    double k_min = 1e4;     // rad/m
    double k_max = 1e9;     // rad/m
    int grid_points = 512;  // log-spaced scan resolution, >= 64
};

// Inverts the dispersion relation: unique k with omega(k) = 2*pi*f. Scans a
// log-spaced grid for sign changes, refines each by bisection to 1e-12
// relative in k, and rejects zero or multiple roots.
double k_of_omega(double frequency_hz, const FieldPoint& field,
                  const MaterialStack& stack, const RootBracket& bracket = {});

namespace roots {

// Grid scan + bisection refinement of fn(x) = target over [lo, hi]. fn may
// return nullopt where it is undefined; such grid cells are skipped. rel_tol
// applies to x. Roots come back sorted ascending.
std::vector<double> find_roots(const std::function<std::optional<double>(double)>& fn,
                               double target, double lo, double hi, int grid_points,
                               bool log_spaced, double rel_tol);

} // namespace roots
} // namespace swtl
