#pragma once
// Phase rotation imparted by a local-field strip on a propagating spin wave,
// field calibration against phase targets, and linearity sweeps.

#include <string>
#include <utility>
#include <vector>

#include "swtl/dispersion.hpp"

namespace swtl {

struct ShifterSpec {
    double length = 0.0;  // m, >= 0
    double delta_b = 0.0; // tesla, signed; sign = field direction vs magnetization
    std::string label;
};

struct SweepSample {
    double x = 0.0; // swept variable: tesla, Hz or m
    double phase_deg = 0.0;
};

struct LinearFit {
    double slope = 0.0;     // deg per x-unit
    double intercept = 0.0; // deg
    double r_squared = 1.0; // in [0, 1]
};

struct SweepTable {
    std::vector<SweepSample> samples; // sorted by x
    LinearFit fit;                    // OLS over exactly these samples
};

LinearFit fit_line(const std::vector<SweepSample>& samples);

// Net phase rotation in degrees: (k0 - k')*length*180/pi, where k0 is the
// wavenumber at the baseline field and k' the one under baseline + delta_b.
// Positive delta_b (along the magnetization) lowers k' and advances the wave.
double phase_shift(const ShifterSpec& shifter, double frequency_hz,
                   const FieldPoint& baseline, const MaterialStack& stack);

struct CalibrationBounds {
    double b_min = -0.5; // tesla
    double b_max = 0.5;
};

inline constexpr double kCalibrationTolDeg = 1e-6;

// Field realizing target_deg on a strip of the given length, by bisection on
// the (monotone) phase response; |realized - target| < kCalibrationTolDeg.
double calibrate_field(double target_deg, double length, double frequency_hz,
                       const FieldPoint& baseline, const MaterialStack& stack,
                       const CalibrationBounds& bounds = {});

// Phase shift on a uniform field grid [b_min, b_max] with a linear fit.
SweepTable sweep_field(double length, double frequency_hz, const FieldPoint& baseline,
                       const MaterialStack& stack, double b_min, double b_max,
                       int steps);

std::vector<std::pair<double, SweepTable>>
sweep_frequency(double length, const std::vector<double>& frequencies_hz,
                const FieldPoint& baseline, const MaterialStack& stack,
                double b_min, double b_max, int steps);

// Phase shift vs strip length at a fixed field; exactly linear in this model.
SweepTable sweep_length(const std::vector<double>& lengths, double delta_b,
                        double frequency_hz, const FieldPoint& baseline,
                        const MaterialStack& stack);

// CSV with header row (x_value, phase_shift_deg), 6 significant digits.
std::string sweep_csv(const SweepTable& table);
// Sidecar summary {slope, intercept, r_squared}; r_squared rounded to 4 decimals.
std::string sweep_summary_json(const SweepTable& table, int indent = 2);
// Whole table (samples + fit) as one JSON document.
std::string sweep_json(const SweepTable& table, int indent = 2);

} // namespace swtl
