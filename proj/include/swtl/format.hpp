#pragma once

#include <cstdio>
#include <string>

namespace swtl {

// Canonical numeric formatting for CSV cells: six significant digits.
// JSON documents keep full precision so exchange files round-trip.
inline std::string fmt_g6(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

// Round half away from zero to a fixed number of decimals; used where
// summaries pin a decimal count (e.g. fit quality to four places).
double round_decimals(double value, int decimals);

} // namespace swtl
