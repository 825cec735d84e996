#pragma once

#include <string>

namespace spectral_bounds {

/// Shortest decimal string that parses back to exactly `value`.
/// NaN and infinities print as "nan", "inf", "-inf".
std::string format_double(double value);

}  // namespace spectral_bounds
