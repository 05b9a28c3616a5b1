#include "swtl/format.hpp"

#include <cmath>

namespace swtl {

double round_decimals(double value, int decimals) {
    double scale = std::pow(10.0, decimals);
    double scaled = value * scale;
    double rounded = std::floor(std::abs(scaled) + 0.5);
    return std::copysign(rounded, scaled) / scale;
}

} // namespace swtl
