// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include "radar/errors.hpp"

namespace radar {

/// Sampling frequency of a series. Carries the seasonal period m and the
/// evaluation horizon H (monthly: m=H=12, quarterly: m=H=4).
enum class Frequency { monthly, quarterly };

inline int seasonal_period(Frequency f) noexcept { return f == Frequency::monthly ? 12 : 4; }
inline int horizon(Frequency f) noexcept { return f == Frequency::monthly ? 12 : 4; }
inline int month_step(Frequency f) noexcept { return f == Frequency::monthly ? 1 : 3; }

inline std::string to_string(Frequency f) { return f == Frequency::monthly ? "monthly" : "quarterly"; }

inline Frequency parse_frequency(std::string_view text) {
    if (text == "monthly" || text == "M") return Frequency::monthly;
    if (text == "quarterly" || text == "Q") return Frequency::quarterly;
    throw Error(errc::invalid_config, "unknown frequency '" + std::string(text) + "' (expected monthly|quarterly)");
}

}  // namespace radar
