#pragma once

#include <cmath>

#include <nlohmann/json.hpp>

namespace depdist {

/// Integral doubles serialize as JSON integers (31, not 31.0); every
/// value the exact cost kinds produce stays below 2^53, where this is
/// lossless.
inline nlohmann::json json_number(double value) {
    if (std::floor(value) == value && std::fabs(value) < 9007199254740992.0)
        return nlohmann::json(static_cast<long long>(value));
    return nlohmann::json(value);
}

}  // namespace depdist
