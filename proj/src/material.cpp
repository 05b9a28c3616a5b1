#include "swtl/material.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "swtl/errors.hpp"

namespace swtl {

double MaterialStack::transverse_wavenumber() const {
    return static_cast<double>(mode) * std::numbers::pi / width;
}

void MaterialStack::validate() const {
    auto require = [](bool ok, const std::string& what) {
        if (!ok) throw config_error("material: " + what);
    };
    require(std::isfinite(Ms) && Ms > 0.0, "Ms must be finite and positive");
    require(std::isfinite(Aex) && Aex > 0.0, "Aex must be finite and positive");
    require(std::isfinite(alpha) && alpha >= 0.0, "alpha must be finite and non-negative");
    require(std::isfinite(gamma) && gamma > 0.0, "gamma must be finite and positive");
    require(std::isfinite(width) && width > 0.0, "width must be finite and positive");
    require(std::isfinite(thickness) && thickness > 0.0,
            "thickness must be finite and positive");
    require(mode >= 1, "mode must be >= 1");
    require(std::isfinite(theta_k), "theta_k must be finite");
    require(std::isfinite(theta_m), "theta_m must be finite");
    require(std::isfinite(mu0) && mu0 > 0.0, "mu0 must be finite and positive");
}

namespace {

MaterialStack cofeb_stack(double width) {
    MaterialStack stack;
    stack.Ms = 1.36e6;     // A/m
    stack.Aex = 18.6e-12;  // J/m
    stack.alpha = 0.004;
    stack.gamma = 1.76e11; // rad/(s*T)
    stack.width = width;
    stack.thickness = 9e-9;
    return stack;
}

} // namespace

MaterialStack material_preset(const std::string& name) {
    if (name == "cofeb-paper" || name == "cofeb-paper-fig2")
        return cofeb_stack(200e-9);
    if (name == "cofeb-paper-mumax-run")
        return cofeb_stack(32e-9);
    throw config_error("unknown material preset '" + name + "'");
}

std::vector<std::string> material_preset_names() {
    return {"cofeb-paper", "cofeb-paper-fig2", "cofeb-paper-mumax-run"};
}

namespace {

std::string trim(const std::string& s) {
    auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

} // namespace

MaterialStack load_material_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open material file '" + path + "'");

    std::map<std::string, double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        try {
            std::size_t used = 0;
            double parsed = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
            values[key] = parsed;
        } catch (const std::exception&) {
            throw config_error(path + ":" + std::to_string(line_no) +
                               ": cannot parse value '" + value + "' for key '" +
                               key + "'");
        }
    }

    MaterialStack stack;
    for (const auto& [key, value] : values) {
        if (key == "Ms") stack.Ms = value;
        else if (key == "Aex") stack.Aex = value;
        else if (key == "alpha") stack.alpha = value;
        else if (key == "gamma") stack.gamma = value;
        else if (key == "width") stack.width = value;
        else if (key == "thickness") stack.thickness = value;
        else if (key == "mode") stack.mode = static_cast<int>(std::lround(value));
        else if (key == "theta_k") stack.theta_k = value;
        else if (key == "theta_m") stack.theta_m = value;
        else if (key == "mu0") stack.mu0 = value;
        else throw config_error(path + ": unknown key '" + key + "'");
    }
    stack.validate();
    return stack;
}

MaterialStack resolve_material(const std::string& name_or_path) {
    const auto names = material_preset_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end())
        return material_preset(name_or_path);
    if (std::ifstream(name_or_path).good())
        return load_material_file(name_or_path);
    throw config_error("'" + name_or_path +
                       "' is neither a material preset nor a readable file");
}

} // namespace swtl
