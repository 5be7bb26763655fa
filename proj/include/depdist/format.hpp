#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <system_error>

namespace depdist {

/// Shortest decimal string that round-trips the value, via
/// std::to_chars. Integral doubles print without a fractional part
/// ("5", not "5.0"), so identical inputs always serialize to identical
/// bytes regardless of locale.
inline std::string format_number(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

inline std::string format_number(long long value) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    if (res.ec != std::errc()) throw std::runtime_error("number formatting failed");
    return std::string(buf, res.ptr);
}

inline std::string format_number(int value) { return format_number(static_cast<long long>(value)); }

/// Parses a full string as a double; rejects trailing junk.
inline double parse_number(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto res = std::from_chars(first, last, value);
    if (res.ec != std::errc() || res.ptr != last)
        throw std::invalid_argument("not a number: '" + text + "'");
    return value;
}

}  // namespace depdist
