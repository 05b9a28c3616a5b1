#pragma once
// Magnetic material and waveguide geometry parameters feeding the dispersion
// relation, plus named presets and a key-value config file loader.

#include <numbers>
#include <string>
#include <vector>

namespace swtl {

inline constexpr double kMu0 = 4e-7 * std::numbers::pi; // T*m/A

struct MaterialStack {
    double Ms = 0.0;      // saturation magnetization, A/m
    double Aex = 0.0;     // exchange constant, J/m
    double alpha = 0.0;   // Gilbert damping; recorded, unused by the phase model
    double gamma = 0.0;   // gyromagnetic ratio, rad/(s*T)
    double width = 0.0;   // waveguide width, m
    double thickness = 0.0; // waveguide thickness, m
    int mode = 1;         // transverse width-mode number, >= 1
    double theta_k = 0.0; // wave-vector angle, rad (operating regime: 0)
    double theta_m = 0.0; // magnetization angle, rad
    double mu0 = kMu0;    // T*m/A

    double omega_m() const { return gamma * mu0 * Ms; } // rad/s
    // Exchange length squared, 2*Aex / (mu0*Ms^2), m^2.
    double lambda_ex() const { return 2.0 * Aex / (mu0 * Ms * Ms); }
    double transverse_wavenumber() const; // mode*pi/width, rad/m

    void validate() const; // throws config_error on a violated invariant
};

// Effective field point, B_eff = mu0*H_eff in tesla. Negative values point
// against the magnetization axis.
struct FieldPoint {
    double b_eff = 0.0; // tesla

    double omega_h(const MaterialStack& stack) const { return stack.gamma * b_eff; }
};

// Built-in presets: "cofeb-paper" (= "cofeb-paper-fig2", 200 nm wide) and
// "cofeb-paper-mumax-run" (32 nm wide).
MaterialStack material_preset(const std::string& name);
std::vector<std::string> material_preset_names();

// `key = value` lines, '#' comments. Keys: Ms, Aex, alpha, gamma, width,
// thickness, mode, theta_k, theta_m, mu0.
MaterialStack load_material_file(const std::string& path);

// Accepts a built-in preset name or a config file path.
MaterialStack resolve_material(const std::string& name_or_path);

} // namespace swtl
