#include "swtl/phase_shifter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"

#include "swtl/errors.hpp"
#include "swtl/format.hpp"

namespace swtl {

namespace {

constexpr double kDegPerRad = 180.0 / std::numbers::pi;

} // namespace

LinearFit fit_line(const std::vector<SweepSample>& samples) {
    if (samples.size() < 2)
        throw invalid_input("linear fit needs at least 2 samples");

    double n = static_cast<double>(samples.size());
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (const auto& s : samples) {
        mean_x += s.x;
        mean_y += s.phase_deg;
    }
    mean_x /= n;
    mean_y /= n;

    double sxx = 0.0;
    double sxy = 0.0;
    for (const auto& s : samples) {
        double dx = s.x - mean_x;
        sxx += dx * dx;
        sxy += dx * (s.phase_deg - mean_y);
    }
    if (sxx == 0.0)
        throw invalid_input("linear fit needs at least 2 distinct x values");

    LinearFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    // ss_res from explicit residuals: the textbook 1 - sxy^2/(sxx*syy) loses
    // all precision exactly where these sweeps live, at r_squared near 1.
    double ss_res = 0.0;
    double ss_tot = 0.0;
    for (const auto& s : samples) {
        double r = s.phase_deg - (fit.slope * s.x + fit.intercept);
        double dy = s.phase_deg - mean_y;
        ss_res += r * r;
        ss_tot += dy * dy;
    }
    fit.r_squared = ss_tot == 0.0 ? 1.0 : 1.0 - ss_res / ss_tot;
    fit.r_squared = std::clamp(fit.r_squared, 0.0, 1.0);
    return fit;
}

double phase_shift(const ShifterSpec& shifter, double frequency_hz,
                   const FieldPoint& baseline, const MaterialStack& stack) {
    if (!std::isfinite(shifter.length) || shifter.length < 0.0)
        throw invalid_input("shifter length must be finite and >= 0");
    if (!std::isfinite(shifter.delta_b))
        throw invalid_input("shifter delta_b must be finite");

    double k0 = k_of_omega(frequency_hz, baseline, stack);
    if (shifter.delta_b == 0.0) return 0.0;

    FieldPoint shifted{baseline.b_eff + shifter.delta_b};
    double k1;
    try {
        k1 = k_of_omega(frequency_hz, shifted, stack);
    } catch (const no_root_error& e) {
        if (shifter.label.empty()) throw;
        throw no_root_error("shifter '" + shifter.label + "': " + e.what());
    }
    return (k0 - k1) * shifter.length * kDegPerRad;
}

double calibrate_field(double target_deg, double length, double frequency_hz,
                       const FieldPoint& baseline, const MaterialStack& stack,
                       const CalibrationBounds& bounds) {
    if (!std::isfinite(target_deg))
        throw invalid_input("calibration target must be finite");
    if (target_deg == 0.0) return 0.0;
    if (!std::isfinite(length) || length <= 0.0)
        throw invalid_input("a nonzero phase target needs a positive shifter length");
    if (!(bounds.b_min < bounds.b_max))
        throw invalid_input("calibration bounds require b_min < b_max");

    auto phase_at = [&](double b) {
        return phase_shift({length, b, ""}, frequency_hz, baseline, stack);
    };

    double b_lo = bounds.b_min;
    double b_hi = bounds.b_max;
    double p_lo = phase_at(b_lo);
    double p_hi = phase_at(b_hi);
    if (!(p_lo < p_hi)) {
        std::ostringstream msg;
        msg << "phase response is not increasing across [" << b_lo << ", " << b_hi
            << "] T (" << p_lo << " deg -> " << p_hi << " deg)";
        throw non_monotonic_error(msg.str());
    }
    if (std::abs(p_lo - target_deg) < kCalibrationTolDeg) return b_lo;
    if (std::abs(p_hi - target_deg) < kCalibrationTolDeg) return b_hi;
    if (target_deg < p_lo || target_deg > p_hi) {
        std::ostringstream msg;
        msg << "target " << target_deg << " deg is outside the achievable range ["
            << p_lo << ", " << p_hi << "] deg for bounds [" << b_lo << ", " << b_hi
            << "] T";
        throw calibration_range_error(msg.str());
    }

    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (b_lo + b_hi);
        double p_mid = phase_at(mid);
        if (std::abs(p_mid - target_deg) < kCalibrationTolDeg) return mid;
        if (p_mid < target_deg)
            b_lo = mid;
        else
            b_hi = mid;
    }
    throw non_monotonic_error("calibration bisection failed to converge; the "
                              "phase response is not monotone inside the bounds");
}

SweepTable sweep_field(double length, double frequency_hz, const FieldPoint& baseline,
                       const MaterialStack& stack, double b_min, double b_max,
                       int steps) {
    if (steps < 2) throw invalid_input("field sweep needs at least 2 steps");
    if (!(b_min < b_max)) throw invalid_input("field sweep requires b_min < b_max");

    SweepTable table;
    table.samples.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        double b = b_min + (b_max - b_min) * static_cast<double>(i) / (steps - 1);
        try {
            table.samples.push_back(
                {b, phase_shift({length, b, ""}, frequency_hz, baseline, stack)});
        } catch (const no_root_error& e) {
            std::ostringstream msg;
            msg << "sweep sample delta_b = " << b << " T: " << e.what();
            throw no_root_error(msg.str());
        }
    }
    table.fit = fit_line(table.samples);
    return table;
}

std::vector<std::pair<double, SweepTable>>
sweep_frequency(double length, const std::vector<double>& frequencies_hz,
                const FieldPoint& baseline, const MaterialStack& stack,
                double b_min, double b_max, int steps) {
    if (frequencies_hz.empty())
        throw invalid_input("frequency sweep needs at least one frequency");
    std::vector<std::pair<double, SweepTable>> tables;
    tables.reserve(frequencies_hz.size());
    for (double f : frequencies_hz)
        tables.emplace_back(f, sweep_field(length, f, baseline, stack, b_min, b_max,
                                           steps));
    return tables;
}

SweepTable sweep_length(const std::vector<double>& lengths, double delta_b,
                        double frequency_hz, const FieldPoint& baseline,
                        const MaterialStack& stack) {
    if (lengths.size() < 2)
        throw invalid_input("length sweep needs at least 2 lengths");

    SweepTable table;
    table.samples.reserve(lengths.size());
    for (double length : lengths)
        table.samples.push_back(
            {length, phase_shift({length, delta_b, ""}, frequency_hz, baseline, stack)});
    std::sort(table.samples.begin(), table.samples.end(),
              [](const SweepSample& a, const SweepSample& b) { return a.x < b.x; });
    table.fit = fit_line(table.samples);
    return table;
}

std::string sweep_csv(const SweepTable& table) {
    std::string out = "x_value,phase_shift_deg\n";
    for (const auto& s : table.samples) {
        out += fmt_g6(s.x);
        out += ',';
        out += fmt_g6(s.phase_deg);
        out += '\n';
    }
    return out;
}

std::string sweep_summary_json(const SweepTable& table, int indent) {
    nlohmann::json doc;
    doc["slope"] = table.fit.slope;
    doc["intercept"] = table.fit.intercept;
    doc["r_squared"] = round_decimals(table.fit.r_squared, 4);
    return doc.dump(indent) + "\n";
}

std::string sweep_json(const SweepTable& table, int indent) {
    nlohmann::json doc;
    doc["samples"] = nlohmann::json::array();
    for (const auto& s : table.samples)
        doc["samples"].push_back({{"x", s.x}, {"phase_deg", s.phase_deg}});
    doc["fit"] = {{"slope", table.fit.slope},
                  {"intercept", table.fit.intercept},
                  {"r_squared", table.fit.r_squared}};
    return doc.dump(indent) + "\n";
}

} // namespace swtl
