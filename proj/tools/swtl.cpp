// Command-line front end for the spin-wave threshold-logic toolchain.
// Subcommands cover each pipeline stage: dispersion curves, phase-shifter
// sweeps, field calibration, netlist compilation, layout simulation, and the
// cost model. All outputs are deterministic.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "swtl/compiler.hpp"
#include "swtl/dispersion.hpp"
#include "swtl/errors.hpp"
#include "swtl/format.hpp"
#include "swtl/material.hpp"
#include "swtl/netlist.hpp"
#include "swtl/phase_shifter.hpp"
#include "swtl/simulator.hpp"

namespace {

namespace fs = std::filesystem;

struct RunConfig {
    std::string material = "cofeb-paper";
    double freq_ghz = 35.0;
    double baseline_t = 0.0;
    double unit_deg = 10.0;
    double shifter_nm = 100.0;
    std::string out_dir = ".";
    std::string format = "csv";

    double frequency_hz() const { return freq_ghz * 1e9; }
    double shifter_length() const { return shifter_nm * 1e-9; }
    swtl::FieldPoint baseline() const { return {baseline_t}; }
};

int exit_code_for(const std::string& category) {
    if (category == "invalid-argument" || category == "config" || category == "io")
        return 2;
    if (category == "evanescent" || category == "below-band" ||
        category == "singularity")
        return 3;
    if (category == "ambiguous-branch" || category == "non-monotonic") return 4;
    if (category == "range") return 5;
    if (category == "budget") return 6;
    if (category == "netlist" || category == "unresolved-signal" ||
        category == "cyclic-netlist")
        return 7;
    if (category == "capacity") return 8;
    return 9;
}

fs::path prepare_out_dir(const RunConfig& config) {
    fs::path dir(config.out_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec && !fs::is_directory(dir))
        throw swtl::io_error("cannot create output directory '" + config.out_dir +
                             "'");
    return dir;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw swtl::io_error("cannot write '" + path.string() + "'");
    out << content;
    if (!out.flush())
        throw swtl::io_error("short write to '" + path.string() + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw swtl::io_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string field_tag(double b) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%+g", b);
    return buf;
}

void run_dispersion(const RunConfig& config, const std::vector<double>& fields,
                    double k_min, double k_max, int points) {
    if (fields.empty())
        throw swtl::invalid_input("dispersion needs at least one field value");
    if (points < 2) throw swtl::invalid_input("dispersion needs at least 2 points");
    if (!(k_min < k_max)) throw swtl::invalid_input("dispersion requires k-min < k-max");

    auto stack = swtl::resolve_material(config.material);
    auto dir = prepare_out_dir(config);
    for (double b : fields) {
        std::string csv = "k_rad_per_m,f_ghz\n";
        for (int i = 0; i < points; ++i) {
            double k = k_min + (k_max - k_min) * static_cast<double>(i) / (points - 1);
            try {
                double omega = swtl::omega_of_k(k, {b}, stack);
                csv += swtl::fmt_g6(k);
                csv += ',';
                csv += swtl::fmt_g6(omega / (2.0 * std::numbers::pi * 1e9));
                csv += '\n';
            } catch (const swtl::evanescent_error&) {
                // No propagating mode at this (k, B): the curve has a gap.
            }
        }
        fs::path path = dir / ("dispersion_B" + field_tag(b) + "T.csv");
        write_file(path, csv);
        std::cout << "wrote " << path.string() << "\n";
    }
}

void emit_sweep(const RunConfig& config, const fs::path& dir,
                const std::string& stem, const swtl::SweepTable& table) {
    if (config.format == "json") {
        fs::path path = dir / (stem + ".json");
        write_file(path, swtl::sweep_json(table));
        std::cout << "wrote " << path.string() << "\n";
        return;
    }
    fs::path csv_path = dir / (stem + ".csv");
    fs::path summary_path = dir / (stem + ".summary.json");
    write_file(csv_path, swtl::sweep_csv(table));
    write_file(summary_path, swtl::sweep_summary_json(table));
    std::cout << "wrote " << csv_path.string() << "\n";
    std::cout << "wrote " << summary_path.string() << "\n";
}

void run_sweep(const RunConfig& config, const std::string& kind, double b_min,
               double b_max, int steps, const std::vector<double>& freqs_ghz,
               const std::vector<double>& lengths_nm, double delta_b_t) {
    auto stack = swtl::resolve_material(config.material);
    auto dir = prepare_out_dir(config);

    if (kind == "field") {
        auto table = swtl::sweep_field(config.shifter_length(), config.frequency_hz(),
                                       config.baseline(), stack, b_min, b_max, steps);
        emit_sweep(config, dir, "sweep_field", table);
        std::cout << "r_squared " << swtl::fmt_g6(table.fit.r_squared) << "\n";
        return;
    }
    if (kind == "frequency") {
        if (freqs_ghz.empty())
            throw swtl::invalid_input("frequency sweep needs --freqs-ghz");
        std::vector<double> freqs;
        for (double f : freqs_ghz) freqs.push_back(f * 1e9);
        auto tables = swtl::sweep_frequency(config.shifter_length(), freqs,
                                            config.baseline(), stack, b_min, b_max,
                                            steps);
        for (std::size_t i = 0; i < tables.size(); ++i) {
            char stem[64];
            std::snprintf(stem, sizeof stem, "sweep_field_f%gGHz", freqs_ghz[i]);
            emit_sweep(config, dir, stem, tables[i].second);
            std::cout << "f_ghz " << swtl::fmt_g6(freqs_ghz[i]) << " r_squared "
                      << swtl::fmt_g6(tables[i].second.fit.r_squared) << "\n";
        }
        return;
    }
    if (kind == "length") {
        if (lengths_nm.empty())
            throw swtl::invalid_input("length sweep needs --lengths-nm");
        std::vector<double> lengths;
        for (double l : lengths_nm) lengths.push_back(l * 1e-9);
        auto table = swtl::sweep_length(lengths, delta_b_t, config.frequency_hz(),
                                        config.baseline(), stack);
        emit_sweep(config, dir, "sweep_length", table);
        std::cout << "r_squared " << swtl::fmt_g6(table.fit.r_squared) << "\n";
        return;
    }
    throw swtl::invalid_input("unknown sweep kind '" + kind + "'");
}

void run_calibrate(const RunConfig& config, double target_deg) {
    auto stack = swtl::resolve_material(config.material);
    double field = swtl::calibrate_field(target_deg, config.shifter_length(),
                                         config.frequency_hz(), config.baseline(),
                                         stack);
    std::cout << swtl::fmt_g6(field) << "\n";
}

swtl::CalibrationPolicy parse_policy(const std::string& name) {
    if (name == "unit-field-scaled") return swtl::CalibrationPolicy::unit_field_scaled;
    if (name == "per-shifter") return swtl::CalibrationPolicy::per_shifter;
    throw swtl::invalid_input("unknown calibration policy '" + name + "'");
}

void run_compile(const RunConfig& config, const std::string& netlist_path,
                 const std::string& policy_name, double max_net_deg) {
    auto stack = swtl::resolve_material(config.material);
    auto netlist = swtl::netlist_from_json(read_file(netlist_path));

    swtl::CompileOptions options;
    options.frequency_hz = config.frequency_hz();
    options.unit_phase_deg = config.unit_deg;
    options.shifter_length = config.shifter_length();
    options.baseline = config.baseline();
    options.policy = parse_policy(policy_name);
    options.max_net_phase_deg = max_net_deg;

    auto layout = swtl::compile_netlist(netlist, stack, config.material, options);

    for (const auto& budget : swtl::validate_phase_budget(netlist, config.unit_deg)) {
        std::string bits;
        for (int b : budget.worst_inputs) bits += static_cast<char>('0' + b);
        std::cout << "gate " << budget.id << ": max |net phase| "
                  << swtl::fmt_g6(budget.max_net_phase_deg) << " deg at inputs "
                  << bits << "\n";
    }

    auto dir = prepare_out_dir(config);
    fs::path path = dir / (fs::path(netlist_path).stem().string() + ".layout.json");
    write_file(path, swtl::layout_to_json(layout));
    std::cout << "wrote " << path.string() << "\n";
}

swtl::Assignment parse_input_bits(const swtl::ThresholdNetlist& netlist,
                                  const std::string& bits) {
    if (bits.size() != netlist.primary_inputs.size())
        throw swtl::invalid_input("expected " +
                                  std::to_string(netlist.primary_inputs.size()) +
                                  " input bits, got '" + bits + "'");
    swtl::Assignment assignment;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1')
            throw swtl::invalid_input("input bits must be 0 or 1, got '" + bits + "'");
        assignment[netlist.primary_inputs[i]] = bits[i] - '0';
    }
    return assignment;
}

void run_simulate(const RunConfig& config, const std::string& layout_path,
                  bool exhaustive, const std::string& input_bits,
                  const std::string& mode_name) {
    auto layout = swtl::layout_from_json(read_file(layout_path));
    swtl::SimMode mode;
    if (mode_name == "physical")
        mode = swtl::SimMode::physical;
    else if (mode_name == "ideal")
        mode = swtl::SimMode::ideal;
    else
        throw swtl::invalid_input("unknown simulation mode '" + mode_name + "'");

    if (exhaustive) {
        auto results = swtl::exhaustive_report(layout, mode);
        auto dir = prepare_out_dir(config);
        for (const auto& gate : layout.netlist.gates) {
            fs::path path = dir / ("report_" + gate.id + ".csv");
            write_file(path, swtl::report_gate_csv(layout, results, gate.id));
            std::cout << "wrote " << path.string() << "\n";
        }
        fs::path json_path = dir / "report.json";
        write_file(json_path, swtl::report_json(layout, results, mode));
        std::cout << "wrote " << json_path.string() << "\n";
        std::cout << "min margin " << swtl::fmt_g6(swtl::min_margin_deg(results))
                  << " deg\n";
        return;
    }

    if (input_bits.empty())
        throw swtl::invalid_input("simulate needs --exhaustive or --input BITS");
    auto assignment = parse_input_bits(layout.netlist, input_bits);
    auto result = swtl::simulate_circuit(layout, assignment, mode);
    for (const auto& gate : result.gates)
        std::cout << "gate " << gate.id << ": net "
                  << swtl::fmt_g6(gate.net_phase_deg) << " deg -> " << gate.output
                  << "\n";
    std::cout << "outputs";
    for (std::size_t i = 0; i < layout.netlist.outputs.size(); ++i)
        std::cout << ' ' << layout.netlist.outputs[i] << '=' << result.outputs[i];
    std::cout << "\n";
}

void run_cost(const std::string& netlist_path) {
    auto netlist = swtl::netlist_from_json(read_file(netlist_path));
    std::cout << swtl::cost_report_csv(netlist);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spin-wave threshold-logic design toolchain"};
    app.require_subcommand(1);

    RunConfig config;
    app.add_option("--preset", config.material,
                   "Material preset name or config file path");
    app.add_option("--freq-ghz", config.freq_ghz, "Operating frequency, GHz");
    app.add_option("--baseline-t", config.baseline_t, "Baseline effective field, T");
    app.add_option("--unit-deg", config.unit_deg, "Phase per weight unit, degrees");
    app.add_option("--shifter-nm", config.shifter_nm, "Shifter length, nm");
    app.add_option("--out", config.out_dir, "Output directory");
    app.add_option("--format", config.format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* dispersion = app.add_subcommand("dispersion", "Dispersion curves per field");
    std::vector<double> fields{-0.1, 0.0, 0.1};
    double k_min = 0.0, k_max = 4e8;
    int points = 201;
    dispersion->add_option("--fields", fields, "Field values, T")
        ->delimiter(',')
        ->expected(1, -1);
    dispersion->add_option("--k-min", k_min, "Lowest wavenumber, rad/m");
    dispersion->add_option("--k-max", k_max, "Highest wavenumber, rad/m");
    dispersion->add_option("--points", points, "Samples per curve");

    auto* sweep = app.add_subcommand("sweep", "Phase-shift sweeps with linear fits");
    std::string kind = "field";
    double b_min = -0.1, b_max = 0.1, delta_b_t = 0.0147;
    int steps = 41;
    std::vector<double> freqs_ghz;
    std::vector<double> lengths_nm;
    sweep->add_option("--kind", kind, "field, frequency or length");
    sweep->add_option("--b-min", b_min, "Sweep start field, T");
    sweep->add_option("--b-max", b_max, "Sweep end field, T");
    sweep->add_option("--steps", steps, "Sample count");
    sweep->add_option("--freqs-ghz", freqs_ghz, "Frequencies for kind=frequency, GHz")
        ->delimiter(',');
    sweep->add_option("--lengths-nm", lengths_nm, "Lengths for kind=length, nm")
        ->delimiter(',');
    sweep->add_option("--delta-b-t", delta_b_t, "Fixed field for kind=length, T");

    auto* calibrate = app.add_subcommand("calibrate", "Field realizing a phase target");
    double target_deg = 10.0;
    calibrate->add_option("--target-deg", target_deg, "Phase target, degrees");

    auto* compile = app.add_subcommand("compile", "Compile a netlist to a layout");
    std::string netlist_path;
    std::string policy_name = "unit-field-scaled";
    double max_net_deg = 360.0;
    compile->add_option("netlist", netlist_path, "Netlist JSON file")->required();
    compile->add_option("--policy", policy_name,
                        "unit-field-scaled or per-shifter calibration");
    compile->add_option("--max-net-deg", max_net_deg, "Net phase readout limit");

    auto* simulate = app.add_subcommand("simulate", "Simulate a compiled layout");
    std::string layout_path;
    std::string input_bits;
    std::string mode_name = "physical";
    bool exhaustive = false;
    simulate->add_option("layout", layout_path, "Layout JSON file")->required();
    simulate->add_flag("--exhaustive", exhaustive, "All input vectors");
    simulate->add_option("--input", input_bits, "Single input vector, e.g. 101");
    simulate->add_option("--mode", mode_name, "physical or ideal");

    auto* cost = app.add_subcommand("cost", "Cost table for a netlist");
    std::string cost_netlist_path;
    cost->add_option("netlist", cost_netlist_path, "Netlist JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[invalid-argument]: " << e.what() << "\n";
        return 2;
    }

    try {
        if (dispersion->parsed())
            run_dispersion(config, fields, k_min, k_max, points);
        else if (sweep->parsed())
            run_sweep(config, kind, b_min, b_max, steps, freqs_ghz, lengths_nm,
                      delta_b_t);
        else if (calibrate->parsed())
            run_calibrate(config, target_deg);
        else if (compile->parsed())
            run_compile(config, netlist_path, policy_name, max_net_deg);
        else if (simulate->parsed())
            run_simulate(config, layout_path, exhaustive, input_bits, mode_name);
        else if (cost->parsed())
            run_cost(cost_netlist_path);
    } catch (const swtl::error& e) {
        std::cerr << "error[" << e.category() << "]: " << e.what() << "\n";
        return exit_code_for(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 9;
    }
    return 0;
}
