// Copyright Contributors to the radar-eval Project
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "radar/errors.hpp"

namespace radar::csv {

/// Splits one CSV record. Supports double-quoted fields with `""` escapes;
/// no embedded newlines (the formats this tool reads never need them).
inline std::vector<std::string> split_record(std::string_view line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"' && cur.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    fields.push_back(std::move(cur));
    return fields;
}

inline std::string quote_field(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos) return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Locale-independent shortest round-trip formatting.
inline std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

/// Fixed-precision formatting for presentation output (SVG, markdown).
inline std::string format_fixed(double v, int precision) {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.setf(std::ios::fixed);
    os.precision(precision);
    os << v;
    return os.str();
}

/// Parses a finite double occupying the whole field.
inline double parse_double(std::string_view field, const std::string& context) {
    double v = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v))
        throw Error(errc::unparseable_value, context + ": '" + std::string(field) + "' is not a finite number");
    return v;
}

/// Reads a whole text file, normalizing CRLF; returns one entry per line.
/// A trailing newline does not produce an empty last line.
inline std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::io_error, "cannot open '" + path + "'");
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::vector<std::string> lines;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t nl = content.find('\n', start);
        if (nl == std::string::npos) {
            if (start < content.size()) lines.push_back(content.substr(start));
            break;
        }
        std::size_t len = nl - start;
        if (len > 0 && content[start + len - 1] == '\r') --len;
        lines.push_back(content.substr(start, len));
        start = nl + 1;
    }
    return lines;
}

}  // namespace radar::csv
