#pragma once
// Evaluates compiled layouts: accumulates shifter phases per gate, decodes
// the sign into a bit, and cascades decoded bits through the circuit.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "swtl/compiler.hpp"
#include "swtl/netlist.hpp"

namespace swtl {

// ideal: every shifter contributes exactly weight * unit phase.
// physical: every shifter contributes its calibrated phase_deg.
enum class SimMode {
    ideal,
    physical,
};

struct GateResult {
    std::string id;
    double net_phase_deg = 0.0;
    int output = 0;            // 1 iff net_phase_deg >= 0
    double margin_deg = 0.0;   // |net_phase_deg|
    bool wrapped = false;      // |net_phase_deg| > 180
};

struct CircuitResult {
    Assignment inputs;
    std::vector<GateResult> gates;   // evaluation order
    std::vector<int> outputs;        // netlist.outputs order
};

GateResult simulate_gate(const GateLayout& gate, const ThresholdGate& spec,
                         const Assignment& signals, SimMode mode);

CircuitResult simulate_circuit(const CircuitLayout& layout,
                               const Assignment& primary_assignment,
                               SimMode mode);

// All 2^n primary vectors in canonical order (first input is the MSB).
std::vector<CircuitResult> exhaustive_report(const CircuitLayout& layout,
                                             SimMode mode);

double min_margin_deg(const std::vector<CircuitResult>& results);

// Per-gate table: one row per primary vector with the sources enabled at that
// gate, the accumulated phase, and the decoded bit.
std::string report_gate_csv(const CircuitLayout& layout,
                            const std::vector<CircuitResult>& results,
                            const std::string& gate_id);

std::string report_json(const CircuitLayout& layout,
                        const std::vector<CircuitResult>& results,
                        SimMode mode, int indent = 2);

} // namespace swtl
