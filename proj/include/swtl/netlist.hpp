#pragma once
// Ideal integer-arithmetic threshold gates and gate networks. A gate outputs
// 1 iff sum(w_i*x_i) - threshold >= 0. This is the ground truth the physical
// pipeline is checked against.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace swtl {

struct ThresholdGate {
    std::string id;
    std::vector<std::string> inputs; // primary input names or upstream gate ids
    std::vector<int> weights;        // signed, one per input
    int threshold = 0;

    // Optional per-gate physical overrides carried through to the compiler.
    std::optional<double> unit_phase_deg;
    std::optional<double> shifter_length; // m
};

struct ThresholdNetlist {
    std::vector<std::string> primary_inputs;
    std::vector<ThresholdGate> gates;
    std::vector<std::string> outputs; // gate ids

    const ThresholdGate* find_gate(const std::string& id) const;
    // Sizes, duplicate ids, reference resolution, acyclicity.
    void validate() const;
    // Gate indices in evaluation order; throws on a cycle.
    std::vector<std::size_t> topological_order() const;
};

using Assignment = std::map<std::string, int>;

int eval_gate(const ThresholdGate& gate, const Assignment& assignment);

// Evaluates gates in topological order; upstream outputs feed downstream
// inputs. Returns gate id -> bit.
std::map<std::string, int> eval_netlist(const ThresholdNetlist& netlist,
                                        const Assignment& primary_assignment);

inline constexpr std::size_t kMaxExhaustiveInputs = 20;

struct TruthTableRow {
    std::vector<int> inputs;  // canonical binary order, first input is the MSB
    std::vector<int> outputs; // netlist.outputs order
};

std::vector<TruthTableRow> truth_table(const ThresholdNetlist& netlist);

// Two-gate full adder: carry = [a + b + cin >= 2], sum = [a + b + cin - 2*carry >= 1].
ThresholdNetlist builtin_full_adder();

// JSON exchange format:
// {primary_inputs, gates:[{id, inputs, weights, threshold}], outputs}
std::string netlist_to_json(const ThresholdNetlist& netlist, int indent = 2);
ThresholdNetlist netlist_from_json(const std::string& text);
ThresholdNetlist load_netlist_file(const std::string& path);

std::string truth_table_csv(const ThresholdNetlist& netlist,
                            const std::vector<TruthTableRow>& rows);

} // namespace swtl
