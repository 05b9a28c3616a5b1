#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "swtl/compiler.hpp"
#include "swtl/errors.hpp"
#include "swtl/material.hpp"
#include "swtl/netlist.hpp"
#include "swtl/phase_shifter.hpp"

using namespace swtl;

namespace {

MaterialStack paper_stack() { return material_preset("cofeb-paper"); }

CircuitLayout compile_fa(CalibrationPolicy policy) {
    CompileOptions options;
    options.policy = policy;
    return compile_netlist(builtin_full_adder(), paper_stack(), "cofeb-paper",
                           options);
}

ThresholdNetlist single_gate(std::vector<int> weights, int threshold) {
    ThresholdNetlist netlist;
    ThresholdGate gate;
    gate.id = "g";
    for (std::size_t i = 0; i < weights.size(); ++i) {
        netlist.primary_inputs.push_back("x" + std::to_string(i));
        gate.inputs.push_back(netlist.primary_inputs.back());
    }
    gate.weights = std::move(weights);
    gate.threshold = threshold;
    netlist.gates.push_back(gate);
    netlist.outputs = {"g"};
    return netlist;
}

} // namespace

TEST_CASE("full adder compiles to four and five shifters") {
    auto layout = compile_fa(CalibrationPolicy::unit_field_scaled);
    REQUIRE(layout.gates.size() == 2);

    const auto& cout = layout.gates[0];
    CHECK(cout.id == "cout");
    CHECK(cout.input_shifters.size() == 3);
    CHECK(cout.threshold_shifter.always_on);
    CHECK(cout.threshold_shifter.source == kThresholdSource);
    CHECK(cout.threshold_shifter.weight == -2);

    const auto& sum = layout.gates[1];
    CHECK(sum.id == "sum");
    CHECK(sum.input_shifters.size() == 4);
    CHECK(sum.threshold_shifter.weight == -1);

    for (const auto& gate : layout.gates) {
        for (const auto& shifter : gate.input_shifters) {
            CHECK(!shifter.always_on);
            CHECK(shifter.length == 100e-9);
        }
    }
}

TEST_CASE("single-input identity gate compiles to two shifters") {
    auto layout = compile_netlist(single_gate({1}, 1), paper_stack(), "cofeb-paper");
    REQUIRE(layout.gates.size() == 1);
    CHECK(layout.gates[0].input_shifters.size() == 1);
    CHECK(layout.gates[0].threshold_shifter.weight == -1);
}

TEST_CASE("negative double weight flips and roughly doubles the field") {
    for (auto policy :
         {CalibrationPolicy::unit_field_scaled, CalibrationPolicy::per_shifter}) {
        auto layout = compile_fa(policy);
        const auto& sum = layout.gates[1];
        const auto& from_cout = sum.input_shifters[3];
        CHECK(from_cout.source == "cout");
        CHECK(from_cout.weight == -2);

        double unit_field = sum.unit_field;
        CHECK(unit_field > 0.0);
        CHECK(from_cout.delta_b < 0.0);
        double ratio = from_cout.delta_b / unit_field;
        if (policy == CalibrationPolicy::unit_field_scaled)
            CHECK(from_cout.delta_b == -2.0 * unit_field);
        else
            CHECK(ratio == doctest::Approx(-2.0).epsilon(0.15));
    }
}

TEST_CASE("ideal phase budget reports the full adder maxima") {
    auto budgets = validate_phase_budget(builtin_full_adder(), 10.0);
    REQUIRE(budgets.size() == 2);

    CHECK(budgets[0].id == "cout");
    CHECK(budgets[0].max_net_phase_deg == 20.0);
    CHECK(budgets[0].worst_net_phase_deg == -20.0);
    CHECK(budgets[0].worst_inputs == std::vector<int>{0, 0, 0});

    CHECK(budgets[1].id == "sum");
    CHECK(budgets[1].max_net_phase_deg == 10.0);
    CHECK(budgets[1].worst_net_phase_deg == -10.0);
    CHECK(budgets[1].worst_inputs == std::vector<int>{0, 0, 0});
}

TEST_CASE("budget scan agrees with direct enumeration") {
    std::mt19937 rng(3030);
    std::uniform_int_distribution<int> w_dist(-3, 3);
    std::uniform_int_distribution<int> t_dist(-4, 4);

    for (int trial = 0; trial < 10; ++trial) {
        ThresholdNetlist netlist;
        netlist.primary_inputs = {"p0", "p1", "p2"};
        ThresholdGate g0;
        g0.id = "g0";
        g0.inputs = {"p0", "p1", "p2"};
        g0.weights = {w_dist(rng), w_dist(rng), w_dist(rng)};
        g0.threshold = t_dist(rng);
        ThresholdGate g1;
        g1.id = "g1";
        g1.inputs = {"p1", "p2", "g0"};
        g1.weights = {w_dist(rng), w_dist(rng), w_dist(rng)};
        g1.threshold = t_dist(rng);
        netlist.gates = {g0, g1};
        netlist.outputs = {"g1"};

        auto budgets = validate_phase_budget(netlist, 10.0);

        double max0 = 0.0, max1 = 0.0;
        for (int r = 0; r < 8; ++r) {
            Assignment a{{"p0", (r >> 2) & 1}, {"p1", (r >> 1) & 1}, {"p2", r & 1}};
            auto values = eval_netlist(netlist, a);
            Assignment all = a;
            all["g0"] = values.at("g0");
            long long s0 = 0, s1 = 0;
            for (std::size_t i = 0; i < 3; ++i) {
                s0 += g0.weights[i] * all.at(g0.inputs[i]);
                s1 += g1.weights[i] * all.at(g1.inputs[i]);
            }
            max0 = std::max(max0, std::abs(10.0 * (s0 - g0.threshold)));
            max1 = std::max(max1, std::abs(10.0 * (s1 - g1.threshold)));
        }
        CHECK(budgets[0].max_net_phase_deg == max0);
        CHECK(budgets[1].max_net_phase_deg == max1);
    }
}

TEST_CASE("over-budget gates are rejected before any calibration") {
    // 400 deg worst case: within the calibration bounds' reach, so only the
    // budget check can be the rejection source.
    try {
        compile_netlist(single_gate({40}, 0), paper_stack(), "cofeb-paper");
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(e.category() == "budget");
        CHECK(e.input_vector() == std::vector<int>{1});
        CHECK(e.net_phase_deg() == 400.0);
        CHECK(std::string(e.what()).find("inputs 1") != std::string::npos);
    }

    // 600 deg worst case: also beyond calibration range; the budget check
    // must still win because it runs first.
    CHECK_THROWS_AS(
        compile_netlist(single_gate({60}, 0), paper_stack(), "cofeb-paper"),
        budget_error);
}

TEST_CASE("tightened budget limit rejects the full adder") {
    CompileOptions options;
    options.max_net_phase_deg = 15.0;
    try {
        compile_netlist(builtin_full_adder(), paper_stack(), "cofeb-paper", options);
        FAIL("expected budget_error");
    } catch (const budget_error& e) {
        CHECK(std::string(e.what()).find("cout") != std::string::npos);
        CHECK(e.net_phase_deg() == -20.0);
    }
}

TEST_CASE("per-shifter calibration realizes every weight exactly") {
    auto layout = compile_fa(CalibrationPolicy::per_shifter);
    for (std::size_t gi = 0; gi < layout.gates.size(); ++gi) {
        const auto& gate = layout.gates[gi];
        auto check_shifter = [&](const PlacedShifter& shifter) {
            double target = shifter.weight * gate.unit_phase_deg;
            CHECK(std::abs(shifter.phase_deg - target) < kCalibrationTolDeg);
        };
        for (const auto& shifter : gate.input_shifters) check_shifter(shifter);
        check_shifter(gate.threshold_shifter);
    }
}

TEST_CASE("unit-field scaling keeps weight-one exact and bends the rest") {
    auto layout = compile_fa(CalibrationPolicy::unit_field_scaled);
    double max_weighted_dev = 0.0;
    for (const auto& gate : layout.gates) {
        auto dev = [&](const PlacedShifter& shifter) {
            return std::abs(shifter.phase_deg - shifter.weight * gate.unit_phase_deg);
        };
        for (const auto& shifter : gate.input_shifters) {
            CHECK(shifter.delta_b == shifter.weight * gate.unit_field);
            if (shifter.weight == 1) CHECK(dev(shifter) < kCalibrationTolDeg);
            CHECK(dev(shifter) < 1.0);
            max_weighted_dev = std::max(max_weighted_dev, dev(shifter));
        }
        CHECK(dev(gate.threshold_shifter) < 1.0);
        max_weighted_dev = std::max(max_weighted_dev, dev(gate.threshold_shifter));
    }
    // The dispersion curvature must show up for |weight| > 1; a perfectly
    // linear field response would make scaled fields exact, which they are not.
    CHECK(max_weighted_dev > 1e-4);
}

TEST_CASE("physical budget stays near the ideal maxima") {
    auto layout = compile_fa(CalibrationPolicy::unit_field_scaled);
    auto budgets = physical_phase_budget(layout);
    REQUIRE(budgets.size() == 2);
    CHECK(budgets[0].max_net_phase_deg == doctest::Approx(20.0).epsilon(0.03));
    CHECK(budgets[1].max_net_phase_deg == doctest::Approx(10.0).epsilon(0.03));
    CHECK(budgets[0].worst_inputs == std::vector<int>{0, 0, 0});
}

TEST_CASE("per-gate overrides reach the layout and the budget") {
    auto netlist = single_gate({1, 1}, 1);
    netlist.gates[0].unit_phase_deg = 5.0;
    netlist.gates[0].shifter_length = 200e-9;

    auto budgets = validate_phase_budget(netlist, 10.0);
    CHECK(budgets[0].max_net_phase_deg == 5.0); // (1+1-1)*5 and (0+0-1)*5

    auto layout = compile_netlist(netlist, paper_stack(), "cofeb-paper");
    CHECK(layout.gates[0].unit_phase_deg == 5.0);
    CHECK(layout.gates[0].input_shifters[0].length == 200e-9);
    CHECK(std::abs(layout.gates[0].input_shifters[0].phase_deg - 5.0) <
          kCalibrationTolDeg);
}

TEST_CASE("cost model counts gates, transducers, shifters and depth") {
    auto fa_cost = cost_report(builtin_full_adder());
    CHECK(fa_cost.gate_count == 2);
    CHECK(fa_cost.transducer_count == 4);
    CHECK(fa_cost.shifter_count == 9);
    CHECK(fa_cost.depth == 2);

    auto identity_cost = cost_report(single_gate({1}, 1));
    CHECK(identity_cost.gate_count == 1);
    CHECK(identity_cost.transducer_count == 2);
    CHECK(identity_cost.shifter_count == 2);
    CHECK(identity_cost.depth == 1);

    ThresholdNetlist empty;
    auto empty_cost = cost_report(empty);
    CHECK(empty_cost.gate_count == 0);
    CHECK(empty_cost.transducer_count == 0);
    CHECK(empty_cost.shifter_count == 0);
    CHECK(empty_cost.depth == 0);
}

TEST_CASE("cost CSV adds the majority reference only for the full adder") {
    auto fa_csv = cost_report_csv(builtin_full_adder());
    CHECK(fa_csv.find("threshold-logic,2,4,9,2") != std::string::npos);
    CHECK(fa_csv.find("majority-reference,3,12,0,2") != std::string::npos);

    auto identity_csv = cost_report_csv(single_gate({1}, 1));
    CHECK(identity_csv.find("majority-reference") == std::string::npos);
}

TEST_CASE("full adder recognition is semantic, not structural") {
    CHECK(matches_builtin_full_adder(builtin_full_adder()));

    // Same function with all weights and thresholds doubled.
    auto scaled = builtin_full_adder();
    for (auto& gate : scaled.gates) {
        for (auto& w : gate.weights) w *= 2;
        gate.threshold *= 2;
    }
    CHECK(matches_builtin_full_adder(scaled));

    auto swapped = builtin_full_adder();
    std::swap(swapped.outputs[0], swapped.outputs[1]);
    CHECK(!matches_builtin_full_adder(swapped));

    CHECK(!matches_builtin_full_adder(single_gate({1, 1, 1}, 2)));
}

TEST_CASE("layout JSON round-trips bit-exactly") {
    auto layout = compile_fa(CalibrationPolicy::unit_field_scaled);
    auto text = layout_to_json(layout);
    auto back = layout_from_json(text);

    CHECK(back.material == layout.material);
    CHECK(back.frequency_hz == layout.frequency_hz);
    CHECK(back.policy == layout.policy);
    REQUIRE(back.gates.size() == layout.gates.size());
    for (std::size_t gi = 0; gi < layout.gates.size(); ++gi) {
        const auto& a = layout.gates[gi];
        const auto& b = back.gates[gi];
        CHECK(a.unit_field == b.unit_field);
        REQUIRE(a.input_shifters.size() == b.input_shifters.size());
        for (std::size_t si = 0; si < a.input_shifters.size(); ++si) {
            CHECK(a.input_shifters[si].source == b.input_shifters[si].source);
            CHECK(a.input_shifters[si].delta_b == b.input_shifters[si].delta_b);
            CHECK(a.input_shifters[si].phase_deg == b.input_shifters[si].phase_deg);
        }
        CHECK(a.threshold_shifter.phase_deg == b.threshold_shifter.phase_deg);
    }

    CHECK_THROWS_AS(layout_from_json("{broken"), netlist_error);
    CHECK_THROWS_AS(load_layout_file("/nonexistent/layout.json"), io_error);
}

TEST_CASE("compile validates its options") {
    auto fa = builtin_full_adder();
    auto stack = paper_stack();
    CompileOptions bad_freq;
    bad_freq.frequency_hz = -1.0;
    CHECK_THROWS_AS(compile_netlist(fa, stack, "cofeb-paper", bad_freq),
                    invalid_input);
    CompileOptions bad_unit;
    bad_unit.unit_phase_deg = 0.0;
    CHECK_THROWS_AS(compile_netlist(fa, stack, "cofeb-paper", bad_unit),
                    invalid_input);
    CompileOptions bad_length;
    bad_length.shifter_length = 0.0;
    CHECK_THROWS_AS(compile_netlist(fa, stack, "cofeb-paper", bad_length),
                    invalid_input);
}
