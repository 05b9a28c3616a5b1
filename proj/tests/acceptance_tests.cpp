// Acceptance gate for the toolchain: eleven end-to-end criteria, one
// PASS/FAIL line each, covering table reproduction, physics plausibility,
// calibration, cost and the property suite. Exits nonzero when any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "swtl/compiler.hpp"
#include "swtl/dispersion.hpp"
#include "swtl/errors.hpp"
#include "swtl/material.hpp"
#include "swtl/netlist.hpp"
#include "swtl/phase_shifter.hpp"
#include "swtl/simulator.hpp"

using namespace swtl;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << index << " (" << name
              << ")";
    if (!detail.empty()) std::cout << ": " << detail;
    std::cout << "\n";
    if (!ok) ++g_failures;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

int main() {
    auto stack = material_preset("cofeb-paper");
    const FieldPoint zero{0.0};
    const double f_op = 35e9;
    const double length = 100e-9;

    // Criteria 1-3 share one compiled full adder and its exhaustive reports.
    auto t0 = std::chrono::steady_clock::now();
    auto layout = compile_netlist(builtin_full_adder(), stack, "cofeb-paper");
    auto physical = exhaustive_report(layout, SimMode::physical);
    auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                       .count();
    auto ideal = exhaustive_report(layout, SimMode::ideal);
    auto rows = truth_table(layout.netlist);

    { // 1: all 16 decoded bits match the reference truth table, under 5 s.
        int matched = 0;
        for (int r = 0; r < 8; ++r) {
            if (physical[r].outputs[0] == rows[r].outputs[0]) ++matched;
            if (physical[r].outputs[1] == rows[r].outputs[1]) ++matched;
        }
        bool ok = matched == 16 && elapsed < 5.0;
        report(1, "full-adder truth table", ok,
               std::to_string(matched) + "/16 bits, " + fmt(elapsed) + " s");
    }

    { // 2: physical net phases stay within 3 deg of the ideal multiples.
        double worst = 0.0;
        std::ostringstream detail;
        for (int r = 0; r < 8; ++r) {
            for (std::size_t gi = 0; gi < physical[r].gates.size(); ++gi) {
                double delta = physical[r].gates[gi].net_phase_deg -
                               ideal[r].gates[gi].net_phase_deg;
                worst = std::max(worst, std::abs(delta));
                detail << (r || gi ? " " : "") << physical[r].gates[gi].id << '@';
                for (int bit : rows[r].inputs) detail << bit;
                detail << '=' << fmt(delta);
            }
        }
        report(2, "phase-magnitude plausibility", worst <= 3.0,
               "max |delta| " + fmt(worst) + " deg; per-row deltas: " + detail.str());
    }

    { // 3: ideal-zero rows decode high under both models.
        bool ok = true;
        int boundary_rows = 0;
        for (int r = 0; r < 8; ++r) {
            for (std::size_t gi = 0; gi < ideal[r].gates.size(); ++gi) {
                if (ideal[r].gates[gi].net_phase_deg != 0.0) continue;
                ++boundary_rows;
                ok = ok && ideal[r].gates[gi].output == 1 &&
                     physical[r].gates[gi].output == 1;
            }
        }
        report(3, "boundary rows decode high", ok && boundary_rows > 0,
               std::to_string(boundary_rows) + " boundary gate-rows checked");
    }

    { // 4: dispersion inversion round-trips across the operating band.
        std::mt19937 rng(20250822);
        std::uniform_real_distribution<double> f_dist(30e9, 40e9);
        std::uniform_real_distribution<double> b_dist(-0.1, 0.1);
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            double f = f_dist(rng);
            FieldPoint field{b_dist(rng)};
            double k = k_of_omega(f, field, stack);
            double omega = omega_of_k(k, field, stack);
            double target = 2.0 * std::numbers::pi * f;
            worst = std::max(worst, std::abs(omega - target) / target);
        }
        report(4, "dispersion round-trip", worst < 1e-9,
               "max rel err " + fmt(worst) + " over 200 points");
    }

    { // 5: linearity quality bands and frequency ordering.
        auto narrow = sweep_field(length, f_op, zero, stack, -0.01, 0.01, 41);
        auto wide = sweep_field(length, f_op, zero, stack, -0.1, 0.1, 41);
        auto r2_30 = sweep_field(length, 30e9, zero, stack, -0.1, 0.1, 41).fit.r_squared;
        auto r2_35 = wide.fit.r_squared;
        auto r2_40 = sweep_field(length, 40e9, zero, stack, -0.1, 0.1, 41).fit.r_squared;
        bool ok = narrow.fit.r_squared >= 0.9999 && r2_35 >= 0.99 && r2_35 < 1.0 &&
                  r2_30 < r2_35 && r2_35 < r2_40;
        report(5, "linearity suite", ok,
               "r2(10mT)=" + fmt(narrow.fit.r_squared) + " r2(100mT) 30/35/40 GHz = " +
                   fmt(r2_30) + "/" + fmt(r2_35) + "/" + fmt(r2_40));
    }

    { // 6: field-direction asymmetry and exact zero at zero drive.
        double plus = phase_shift({length, 0.1, ""}, f_op, zero, stack);
        double minus = phase_shift({length, -0.1, ""}, f_op, zero, stack);
        double zero_shift = phase_shift({length, 0.0, ""}, f_op, zero, stack);
        bool ok = std::abs(plus) > std::abs(minus) && zero_shift == 0.0;
        report(6, "field asymmetry", ok,
               "phase(+0.1T)=" + fmt(plus) + " deg, phase(-0.1T)=" + fmt(minus) +
                   " deg, phase(0)=" + fmt(zero_shift));
    }

    { // 7: calibration round-trip and agreement with the reference field.
        double worst = 0.0;
        for (double target : {-30.0, -20.0, -10.0, 0.0, 10.0, 20.0, 30.0}) {
            double b = calibrate_field(target, length, f_op, zero, stack);
            double realized = phase_shift({length, b, ""}, f_op, zero, stack);
            worst = std::max(worst, std::abs(realized - target));
        }
        double unit_field = calibrate_field(10.0, length, f_op, zero, stack);
        double ratio = unit_field / 0.0147;
        bool ok = worst < 1e-6 && ratio > 1.0 / 3.0 && ratio < 3.0;
        report(7, "calibration", ok,
               "max round-trip err " + fmt(worst) + " deg, unit field " +
                   fmt(unit_field) + " T (x" + fmt(ratio) + " of 0.0147)");
    }

    { // 8: phase scales with shifter length to high relative accuracy.
        double base = phase_shift({length, 0.01, ""}, f_op, zero, stack);
        double worst = 0.0;
        for (double c : {0.5, 2.0, 3.0}) {
            double scaled = phase_shift({c * length, 0.01, ""}, f_op, zero, stack);
            worst = std::max(worst, std::abs(scaled / base - c) / c);
        }
        report(8, "length proportionality", worst <= 1e-12,
               "max rel err " + fmt(worst));
    }

    { // 9: cost model integers.
        auto cost = cost_report(layout.netlist);
        auto csv = cost_report_csv(layout.netlist);
        bool ok = cost.gate_count == 2 && cost.transducer_count == 4 &&
                  cost.shifter_count == 9 && cost.depth == 2 &&
                  csv.find("majority-reference,3,12") != std::string::npos;
        report(9, "cost report", ok,
               std::to_string(cost.gate_count) + " gates / " +
                   std::to_string(cost.transducer_count) + " transducers / " +
                   std::to_string(cost.shifter_count) + " shifters / depth " +
                   std::to_string(cost.depth));
    }

    { // 10: budget rejection names the vector; full-adder maxima are exact.
        bool rejected = false;
        std::string message;
        try {
            ThresholdNetlist over;
            over.primary_inputs = {"x"};
            over.gates.push_back({"g", {"x"}, {40}, 0, {}, {}});
            over.outputs = {"g"};
            compile_netlist(over, stack, "cofeb-paper");
        } catch (const budget_error& e) {
            rejected = e.input_vector() == std::vector<int>{1};
            message = e.what();
        }
        auto budgets = validate_phase_budget(layout.netlist, 10.0);
        bool maxima = budgets.size() == 2 && budgets[0].max_net_phase_deg == 20.0 &&
                      budgets[1].max_net_phase_deg == 10.0;
        report(10, "budget validation",
               rejected && message.find("inputs 1") != std::string::npos && maxima,
               "reject: " + (message.empty() ? "(none)" : message) + "; FA maxima " +
                   fmt(budgets[0].max_net_phase_deg) + "/" +
                   fmt(budgets[1].max_net_phase_deg) + " deg");
    }

    { // 11: evaluator equals the arithmetic oracle; weight scaling is inert.
        std::mt19937 rng(424242);
        std::uniform_int_distribution<int> n_dist(1, 4);
        std::uniform_int_distribution<int> w_dist(-5, 5);
        std::uniform_int_distribution<int> t_dist(-8, 8);
        bool ok = true;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            int n = n_dist(rng);
            ThresholdGate gate;
            gate.id = "g";
            for (int i = 0; i < n; ++i) {
                gate.inputs.push_back("x" + std::to_string(i));
                gate.weights.push_back(w_dist(rng));
            }
            gate.threshold = t_dist(rng);
            for (int r = 0; r < (1 << n) && ok; ++r) {
                Assignment a;
                int sum = 0;
                for (int i = 0; i < n; ++i) {
                    int bit = (r >> (n - 1 - i)) & 1;
                    a[gate.inputs[i]] = bit;
                    sum += gate.weights[i] * bit;
                }
                int expected = sum - gate.threshold >= 0 ? 1 : 0;
                ok = ok && eval_gate(gate, a) == expected;
                for (int c : {2, 3, 7}) {
                    auto scaled = gate;
                    for (auto& w : scaled.weights) w *= c;
                    scaled.threshold *= c;
                    ok = ok && eval_gate(scaled, a) == expected;
                }
            }
        }
        report(11, "property suite", ok,
               "100 random gates, all assignments, scaling x2/x3/x7");
    }

    if (g_failures > 0) {
        std::cout << g_failures << " criteria failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
