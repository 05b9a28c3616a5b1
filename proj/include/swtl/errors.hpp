#pragma once
// Error taxonomy for the swtl library. Every failure carries a stable
// machine-readable category string that the CLI surfaces verbatim.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace swtl {

class error : public std::runtime_error {
public:
    error(std::string category, const std::string& message)
        : std::runtime_error(message), category_(std::move(category)) {}

    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

// Non-finite or out-of-domain argument.
class invalid_input : public error {
public:
    explicit invalid_input(const std::string& message)
        : error("invalid-argument", message) {}
};

// Material preset or config file problem.
class config_error : public error {
public:
    explicit config_error(const std::string& message) : error("config", message) {}
};

// Dispersion radicand went negative: no propagating wave at this field.
class evanescent_error : public error {
public:
    evanescent_error(const std::string& message, double radicand)
        : error("evanescent", message), radicand_(radicand) {}

    double radicand() const noexcept { return radicand_; }

private:
    double radicand_;
};

// Zero denominator in the dipole factor.
class singularity_error : public error {
public:
    explicit singularity_error(const std::string& message)
        : error("singularity", message) {}
};

// Requested frequency is below the dispersion band over the whole bracket
// (or the bracket is entirely evanescent).
class no_root_error : public error {
public:
    explicit no_root_error(const std::string& message)
        : error("below-band", message) {}
};

// More than one wavenumber matches the requested frequency; the caller must
// narrow the bracket.
class ambiguous_root_error : public error {
public:
    ambiguous_root_error(const std::string& message, std::vector<double> roots)
        : error("ambiguous-branch", message), roots_(std::move(roots)) {}

    const std::vector<double>& roots() const noexcept { return roots_; }

private:
    std::vector<double> roots_;
};

// Calibration target unreachable within the field search bounds.
class calibration_range_error : public error {
public:
    explicit calibration_range_error(const std::string& message)
        : error("range", message) {}
};

// Phase response is not monotone over the calibration bracket.
class non_monotonic_error : public error {
public:
    explicit non_monotonic_error(const std::string& message)
        : error("non-monotonic", message) {}
};

// Worst-case net phase reached the 360 degree readout limit. Carries the
// offending primary input vector and the signed net phase it produces.
class budget_error : public error {
public:
    budget_error(const std::string& message, std::vector<int> input_vector,
                 double net_phase_deg)
        : error("budget", message),
          input_vector_(std::move(input_vector)),
          net_phase_deg_(net_phase_deg) {}

    const std::vector<int>& input_vector() const noexcept { return input_vector_; }
    double net_phase_deg() const noexcept { return net_phase_deg_; }

private:
    std::vector<int> input_vector_;
    double net_phase_deg_;
};

// Structural netlist problems. The category distinguishes the failure kind:
// "unresolved-signal", "cyclic-netlist", "capacity" or plain "netlist".
class netlist_error : public error {
public:
    netlist_error(std::string category, const std::string& message)
        : error(std::move(category), message) {}
};

class io_error : public error {
public:
    explicit io_error(const std::string& message) : error("io", message) {}
};

} // namespace swtl
