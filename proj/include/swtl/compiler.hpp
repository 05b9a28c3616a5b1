#pragma once
// Lowers ideal threshold netlists onto waveguide hardware: each gate becomes
// a waveguide with one phase shifter per input plus one bias shifter, each
// shifter calibrated so its switched-on phase equals weight * unit phase.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "swtl/material.hpp"
#include "swtl/netlist.hpp"
#include "swtl/phase_shifter.hpp"

namespace swtl {

// How per-weight control fields are derived from the unit calibration.
//  unit_field_scaled: calibrate the field once for +1 unit of phase, then
//    scale the field linearly with the weight. Mirrors analog weighting via a
//    shared current scale; non-unit weights inherit the dispersion curvature.
//  per_shifter: calibrate every shifter independently to weight * unit. Each
//    switched-on phase is exact to the calibration tolerance.
enum class CalibrationPolicy {
    unit_field_scaled,
    per_shifter,
};

struct CompileOptions {
    double frequency_hz = 35e9;
    double unit_phase_deg = 10.0;
    double shifter_length = 100e-9; // m
    FieldPoint baseline{0.0};
    CalibrationPolicy policy = CalibrationPolicy::unit_field_scaled;
    // Sign readout is unambiguous only below a full turn: compilation rejects
    // any gate whose worst-case |net phase| reaches this limit.
    double max_net_phase_deg = 360.0;
    CalibrationBounds bounds{};
};

inline constexpr const char* kThresholdSource = "THRESHOLD";

struct PlacedShifter {
    std::string source;    // driving signal name, or kThresholdSource
    int weight = 0;        // signed multiple of the unit phase
    double length = 0.0;   // m
    double delta_b = 0.0;  // T applied when the shifter is on
    double phase_deg = 0.0; // realized phase when on
    bool always_on = false; // true only for the threshold shifter
};

struct GateLayout {
    std::string id;
    double unit_phase_deg = 0.0;
    double unit_field = 0.0; // T realizing +1 unit of phase at this gate
    // Index-aligned with the gate's inputs (duplicated sources stay distinct).
    std::vector<PlacedShifter> input_shifters;
    PlacedShifter threshold_shifter; // always on, weight = -threshold
    std::string read_position = "output-transducer";
};

struct CircuitLayout {
    std::string material;
    double frequency_hz = 0.0;
    double baseline_field = 0.0;
    CalibrationPolicy policy = CalibrationPolicy::unit_field_scaled;
    ThresholdNetlist netlist;
    std::vector<GateLayout> gates;

    const GateLayout* find_gate(const std::string& id) const;
};

struct GateBudget {
    std::string id;
    double max_net_phase_deg = 0.0;   // |worst_net_phase_deg|
    double worst_net_phase_deg = 0.0; // signed net phase at worst_inputs
    std::vector<int> worst_inputs;    // first maximizing primary vector
};

// Worst-case |net ideal phase| per gate over all 2^n primary vectors, with
// upstream gates evaluated through the ideal netlist. Requires at most
// kMaxExhaustiveInputs primaries.
std::vector<GateBudget> validate_phase_budget(const ThresholdNetlist& netlist,
                                              double unit_phase_deg);

// Same scan against the compiled shifter phases instead of ideal multiples.
std::vector<GateBudget> physical_phase_budget(const CircuitLayout& layout);

// Budget check runs before any calibration so an over-budget netlist fails
// with a budget error even if a weight would also exceed the field bounds.
CircuitLayout compile_netlist(const ThresholdNetlist& netlist,
                              const MaterialStack& stack,
                              const std::string& material_name,
                              const CompileOptions& options = {});

struct CostReport {
    std::size_t gate_count = 0;
    std::size_t transducer_count = 0; // 2 per gate
    std::size_t shifter_count = 0;    // inputs + bias per gate
    std::size_t depth = 0;            // longest gate chain
};

CostReport cost_report(const ThresholdNetlist& netlist);

// True when the netlist computes the same 8-row table as builtin_full_adder()
// with inputs (a, b, cin) in that role order.
bool matches_builtin_full_adder(const ThresholdNetlist& netlist);

std::string layout_to_json(const CircuitLayout& layout, int indent = 2);
CircuitLayout layout_from_json(const std::string& text);
CircuitLayout load_layout_file(const std::string& path);

// One row per design; adds a majority-gate full-adder reference row when the
// netlist is a full adder.
std::string cost_report_csv(const ThresholdNetlist& netlist);

} // namespace swtl
