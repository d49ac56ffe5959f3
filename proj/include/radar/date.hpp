// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

#include "radar/errors.hpp"

namespace radar {

/// Calendar date, ISO-8601 `YYYY-MM-DD`. Day-of-month is preserved verbatim;
/// spacing checks work on the year/month pair so both month-start and
/// month-end dating conventions pass validation.
struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    auto operator<=>(const Date&) const = default;

    int month_index() const noexcept { return year * 12 + (month - 1); }
};

namespace detail {
inline bool parse_fixed_digits(std::string_view s, std::size_t pos, std::size_t count, int& out) {
    int v = 0;
    for (std::size_t i = pos; i < pos + count; ++i) {
        if (i >= s.size() || s[i] < '0' || s[i] > '9') return false;
        v = v * 10 + (s[i] - '0');
    }
    out = v;
    return true;
}
}  // namespace detail

/// Strict `YYYY-MM-DD` parse. Throws UnparseableTimestamp otherwise.
inline Date parse_date(std::string_view text) {
    Date d;
    const bool shape_ok = text.size() == 10 && text[4] == '-' && text[7] == '-' &&
                          detail::parse_fixed_digits(text, 0, 4, d.year) &&
                          detail::parse_fixed_digits(text, 5, 2, d.month) &&
                          detail::parse_fixed_digits(text, 8, 2, d.day);
    if (!shape_ok || d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31)
        throw Error(errc::unparseable_timestamp, "'" + std::string(text) + "' is not an ISO-8601 date");
    return d;
}

inline std::string format_date(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

/// Whole calendar months from a to b (ignores day-of-month).
inline int months_between(const Date& a, const Date& b) noexcept {
    return b.month_index() - a.month_index();
}

}  // namespace radar
