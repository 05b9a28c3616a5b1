#include "swtl/netlist.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "json.hpp"

#include "swtl/errors.hpp"

namespace swtl {

const ThresholdGate* ThresholdNetlist::find_gate(const std::string& id) const {
    for (const auto& gate : gates)
        if (gate.id == id) return &gate;
    return nullptr;
}

void ThresholdNetlist::validate() const {
    std::set<std::string> names;
    for (const auto& name : primary_inputs) {
        if (name.empty())
            throw netlist_error("netlist", "primary input with empty name");
        if (!names.insert(name).second)
            throw netlist_error("netlist", "duplicate signal name '" + name + "'");
    }
    for (const auto& gate : gates) {
        if (gate.id.empty()) throw netlist_error("netlist", "gate with empty id");
        if (!names.insert(gate.id).second)
            throw netlist_error("netlist", "duplicate signal name '" + gate.id + "'");
        if (gate.inputs.size() != gate.weights.size())
            throw netlist_error("netlist", "gate '" + gate.id + "' has " +
                                               std::to_string(gate.inputs.size()) +
                                               " inputs but " +
                                               std::to_string(gate.weights.size()) +
                                               " weights");
        if (gate.unit_phase_deg &&
            !(std::isfinite(*gate.unit_phase_deg) && *gate.unit_phase_deg > 0.0))
            throw netlist_error("netlist", "gate '" + gate.id +
                                               "': unit_phase_deg override must be "
                                               "finite and positive");
        if (gate.shifter_length &&
            !(std::isfinite(*gate.shifter_length) && *gate.shifter_length > 0.0))
            throw netlist_error("netlist", "gate '" + gate.id +
                                               "': shifter_length override must be "
                                               "finite and positive");
    }
    for (const auto& gate : gates)
        for (const auto& input : gate.inputs)
            if (!names.count(input))
                throw netlist_error("unresolved-signal",
                                    "gate '" + gate.id + "' reads undefined signal '" +
                                        input + "'");
    for (const auto& output : outputs)
        if (!find_gate(output))
            throw netlist_error("unresolved-signal",
                                "output '" + output + "' is not a gate id");
    topological_order();
}

std::vector<std::size_t> ThresholdNetlist::topological_order() const {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < gates.size(); ++i) index[gates[i].id] = i;

    std::vector<std::size_t> in_degree(gates.size(), 0);
    std::vector<std::vector<std::size_t>> consumers(gates.size());
    for (std::size_t i = 0; i < gates.size(); ++i) {
        for (const auto& input : gates[i].inputs) {
            auto it = index.find(input);
            if (it == index.end()) continue; // primary input
            consumers[it->second].push_back(i);
            ++in_degree[i];
        }
    }

    // Min-heap keeps the order deterministic across runs.
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t i = 0; i < gates.size(); ++i)
        if (in_degree[i] == 0) ready.push(i);

    std::vector<std::size_t> order;
    order.reserve(gates.size());
    while (!ready.empty()) {
        std::size_t i = ready.top();
        ready.pop();
        order.push_back(i);
        for (std::size_t j : consumers[i])
            if (--in_degree[j] == 0) ready.push(j);
    }
    if (order.size() != gates.size()) {
        for (std::size_t i = 0; i < gates.size(); ++i)
            if (in_degree[i] > 0)
                throw netlist_error("cyclic-netlist",
                                    "netlist contains a cycle through gate '" +
                                        gates[i].id + "'");
    }
    return order;
}

int eval_gate(const ThresholdGate& gate, const Assignment& assignment) {
    long long sum = 0;
    for (std::size_t i = 0; i < gate.inputs.size(); ++i) {
        auto it = assignment.find(gate.inputs[i]);
        if (it == assignment.end())
            throw netlist_error("unresolved-signal",
                                "gate '" + gate.id + "' reads signal '" +
                                    gate.inputs[i] + "' with no value");
        if (it->second != 0 && it->second != 1)
            throw invalid_input("signal '" + gate.inputs[i] +
                                "' has non-binary value " +
                                std::to_string(it->second));
        sum += static_cast<long long>(gate.weights[i]) * it->second;
    }
    return sum - gate.threshold >= 0 ? 1 : 0;
}

std::map<std::string, int> eval_netlist(const ThresholdNetlist& netlist,
                                        const Assignment& primary_assignment) {
    Assignment signals;
    for (const auto& name : netlist.primary_inputs) {
        auto it = primary_assignment.find(name);
        if (it == primary_assignment.end())
            throw netlist_error("unresolved-signal",
                                "primary input '" + name + "' has no value");
        signals[name] = it->second;
    }
    std::map<std::string, int> gate_values;
    for (std::size_t i : netlist.topological_order()) {
        const auto& gate = netlist.gates[i];
        int out = eval_gate(gate, signals);
        signals[gate.id] = out;
        gate_values[gate.id] = out;
    }
    return gate_values;
}

std::vector<TruthTableRow> truth_table(const ThresholdNetlist& netlist) {
    std::size_t n = netlist.primary_inputs.size();
    if (n > kMaxExhaustiveInputs)
        throw netlist_error("capacity",
                            "exhaustive evaluation over " + std::to_string(n) +
                                " inputs exceeds the limit of " +
                                std::to_string(kMaxExhaustiveInputs));

    std::vector<TruthTableRow> rows;
    rows.reserve(std::size_t{1} << n);
    for (std::size_t r = 0; r < (std::size_t{1} << n); ++r) {
        TruthTableRow row;
        Assignment assignment;
        row.inputs.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            row.inputs[i] = static_cast<int>((r >> (n - 1 - i)) & 1u);
            assignment[netlist.primary_inputs[i]] = row.inputs[i];
        }
        auto values = eval_netlist(netlist, assignment);
        row.outputs.reserve(netlist.outputs.size());
        for (const auto& output : netlist.outputs)
            row.outputs.push_back(values.at(output));
        rows.push_back(std::move(row));
    }
    return rows;
}

ThresholdNetlist builtin_full_adder() {
    ThresholdNetlist fa;
    fa.primary_inputs = {"a", "b", "cin"};
    fa.gates.push_back({"cout", {"a", "b", "cin"}, {1, 1, 1}, 2, {}, {}});
    fa.gates.push_back({"sum", {"a", "b", "cin", "cout"}, {1, 1, 1, -2}, 1, {}, {}});
    fa.outputs = {"cout", "sum"};
    return fa;
}

namespace {

using nlohmann::json;

json gate_to_json(const ThresholdGate& gate) {
    json doc;
    doc["id"] = gate.id;
    doc["inputs"] = gate.inputs;
    doc["weights"] = gate.weights;
    doc["threshold"] = gate.threshold;
    if (gate.unit_phase_deg) doc["unit_phase_deg"] = *gate.unit_phase_deg;
    if (gate.shifter_length) doc["shifter_length_m"] = *gate.shifter_length;
    return doc;
}

ThresholdGate gate_from_json(const json& doc) {
    ThresholdGate gate;
    gate.id = doc.at("id").get<std::string>();
    gate.inputs = doc.at("inputs").get<std::vector<std::string>>();
    gate.weights = doc.at("weights").get<std::vector<int>>();
    gate.threshold = doc.at("threshold").get<int>();
    if (doc.contains("unit_phase_deg"))
        gate.unit_phase_deg = doc.at("unit_phase_deg").get<double>();
    if (doc.contains("shifter_length_m"))
        gate.shifter_length = doc.at("shifter_length_m").get<double>();
    return gate;
}

} // namespace

std::string netlist_to_json(const ThresholdNetlist& netlist, int indent) {
    json doc;
    doc["primary_inputs"] = netlist.primary_inputs;
    doc["gates"] = json::array();
    for (const auto& gate : netlist.gates) doc["gates"].push_back(gate_to_json(gate));
    doc["outputs"] = netlist.outputs;
    return doc.dump(indent) + "\n";
}

ThresholdNetlist netlist_from_json(const std::string& text) {
    ThresholdNetlist netlist;
    try {
        json doc = json::parse(text);
        netlist.primary_inputs = doc.at("primary_inputs").get<std::vector<std::string>>();
        for (const auto& g : doc.at("gates")) netlist.gates.push_back(gate_from_json(g));
        netlist.outputs = doc.at("outputs").get<std::vector<std::string>>();
    } catch (const json::exception& e) {
        throw netlist_error("netlist", std::string("netlist JSON: ") + e.what());
    }
    netlist.validate();
    return netlist;
}

ThresholdNetlist load_netlist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open netlist file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return netlist_from_json(buf.str());
}

std::string truth_table_csv(const ThresholdNetlist& netlist,
                            const std::vector<TruthTableRow>& rows) {
    std::string out;
    bool first = true;
    auto cell = [&](const std::string& text) {
        if (!first) out += ',';
        out += text;
        first = false;
    };
    for (const auto& name : netlist.primary_inputs) cell(name);
    for (const auto& output : netlist.outputs) cell(output);
    out += '\n';
    for (const auto& row : rows) {
        first = true;
        for (int bit : row.inputs) cell(std::to_string(bit));
        for (int bit : row.outputs) cell(std::to_string(bit));
        out += '\n';
    }
    return out;
}

} // namespace swtl
