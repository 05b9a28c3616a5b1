#include "swtl/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "swtl/errors.hpp"
#include "swtl/format.hpp"

namespace swtl {

GateResult simulate_gate(const GateLayout& gate, const ThresholdGate& spec,
                         const Assignment& signals, SimMode mode) {
    GateResult result;
    result.id = spec.id;

    double net = 0.0;
    if (mode == SimMode::ideal) {
        long long sum = 0;
        for (std::size_t i = 0; i < spec.inputs.size(); ++i) {
            auto it = signals.find(spec.inputs[i]);
            if (it == signals.end())
                throw netlist_error("unresolved-signal",
                                    "gate '" + spec.id + "' reads signal '" +
                                        spec.inputs[i] + "' with no value");
            sum += static_cast<long long>(spec.weights[i]) * it->second;
        }
        // Integer multiple times the unit phase stays exact in ideal mode.
        net = gate.unit_phase_deg * static_cast<double>(sum - spec.threshold);
    } else {
        // Index alignment between shifters and inputs only matters here.
        if (gate.input_shifters.size() != spec.inputs.size())
            throw netlist_error("netlist", "layout for gate '" + spec.id +
                                               "' does not match its netlist inputs");
        net = gate.threshold_shifter.phase_deg;
        for (std::size_t i = 0; i < spec.inputs.size(); ++i) {
            auto it = signals.find(spec.inputs[i]);
            if (it == signals.end())
                throw netlist_error("unresolved-signal",
                                    "gate '" + spec.id + "' reads signal '" +
                                        spec.inputs[i] + "' with no value");
            if (it->second == 1) net += gate.input_shifters[i].phase_deg;
        }
    }

    result.net_phase_deg = net;
    result.output = net >= 0.0 ? 1 : 0;
    result.margin_deg = std::abs(net);
    result.wrapped = result.margin_deg > 180.0;
    return result;
}

CircuitResult simulate_circuit(const CircuitLayout& layout,
                               const Assignment& primary_assignment, SimMode mode) {
    layout.netlist.validate();

    CircuitResult result;
    Assignment signals;
    for (const auto& name : layout.netlist.primary_inputs) {
        auto it = primary_assignment.find(name);
        if (it == primary_assignment.end())
            throw netlist_error("unresolved-signal",
                                "primary input '" + name + "' has no value");
        if (it->second != 0 && it->second != 1)
            throw invalid_input("primary input '" + name + "' has non-binary value " +
                                std::to_string(it->second));
        signals[name] = it->second;
        result.inputs[name] = it->second;
    }

    for (std::size_t gi : layout.netlist.topological_order()) {
        const auto& spec = layout.netlist.gates[gi];
        const GateLayout* gate = layout.find_gate(spec.id);
        if (!gate)
            throw netlist_error("netlist",
                                "layout does not cover gate '" + spec.id + "'");
        GateResult gr = simulate_gate(*gate, spec, signals, mode);
        // Only the decoded bit crosses a gate boundary; phase does not cascade.
        signals[spec.id] = gr.output;
        result.gates.push_back(std::move(gr));
    }

    result.outputs.reserve(layout.netlist.outputs.size());
    for (const auto& output : layout.netlist.outputs)
        result.outputs.push_back(signals.at(output));
    return result;
}

std::vector<CircuitResult> exhaustive_report(const CircuitLayout& layout,
                                             SimMode mode) {
    std::size_t n = layout.netlist.primary_inputs.size();
    if (n > kMaxExhaustiveInputs)
        throw netlist_error("capacity",
                            "exhaustive simulation over " + std::to_string(n) +
                                " inputs exceeds the limit of " +
                                std::to_string(kMaxExhaustiveInputs));

    std::vector<CircuitResult> results;
    results.reserve(std::size_t{1} << n);
    for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) {
        Assignment assignment;
        for (std::size_t i = 0; i < n; ++i)
            assignment[layout.netlist.primary_inputs[i]] =
                static_cast<int>((r >> (n - 1 - i)) & 1u);
        results.push_back(simulate_circuit(layout, assignment, mode));
    }
    return results;
}

double min_margin_deg(const std::vector<CircuitResult>& results) {
    double min_margin = std::numeric_limits<double>::infinity();
    for (const auto& result : results)
        for (const auto& gate : result.gates)
            min_margin = std::min(min_margin, gate.margin_deg);
    return min_margin;
}

std::string report_gate_csv(const CircuitLayout& layout,
                            const std::vector<CircuitResult>& results,
                            const std::string& gate_id) {
    if (!layout.netlist.find_gate(gate_id))
        throw netlist_error("unresolved-signal",
                            "no gate '" + gate_id + "' in the layout");

    // One row per input vector: input bits, the gate's net phase, the decoded
    // bit. Margins and wrap flags live in the JSON report.
    std::string out;
    for (const auto& name : layout.netlist.primary_inputs) {
        out += name;
        out += ',';
    }
    out += "delta_phi_deg,output\n";

    for (const auto& result : results) {
        const GateResult* row = nullptr;
        for (const auto& gate : result.gates)
            if (gate.id == gate_id) row = &gate;
        if (!row)
            throw netlist_error("unresolved-signal",
                                "report rows lack gate '" + gate_id + "'");

        for (const auto& name : layout.netlist.primary_inputs) {
            out += std::to_string(result.inputs.at(name));
            out += ',';
        }
        out += fmt_g6(row->net_phase_deg);
        out += ',';
        out += std::to_string(row->output);
        out += '\n';
    }
    return out;
}

std::string report_json(const CircuitLayout& layout,
                        const std::vector<CircuitResult>& results, SimMode mode,
                        int indent) {
    nlohmann::json doc;
    doc["mode"] = mode == SimMode::ideal ? "ideal" : "physical";
    doc["material"] = layout.material;
    doc["frequency_hz"] = layout.frequency_hz;
    doc["baseline_field_t"] = layout.baseline_field;
    doc["primary_inputs"] = layout.netlist.primary_inputs;
    doc["outputs"] = layout.netlist.outputs;
    doc["rows"] = nlohmann::json::array();
    for (const auto& result : results) {
        nlohmann::json row;
        row["inputs"] = nlohmann::json::array();
        for (const auto& name : layout.netlist.primary_inputs)
            row["inputs"].push_back(result.inputs.at(name));
        row["outputs"] = result.outputs;
        row["gates"] = nlohmann::json::array();
        for (const auto& gate : result.gates)
            row["gates"].push_back({{"id", gate.id},
                                    {"net_phase_deg", gate.net_phase_deg},
                                    {"output", gate.output},
                                    {"margin_deg", gate.margin_deg},
                                    {"wrapped", gate.wrapped}});
        doc["rows"].push_back(std::move(row));
    }
    if (!results.empty()) doc["min_margin_deg"] = min_margin_deg(results);
    return doc.dump(indent) + "\n";
}

} // namespace swtl
