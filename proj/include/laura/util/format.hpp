#pragma once

#include <charconv>
#include <stdexcept>
#include <string>

namespace laura::util {

/// Shortest decimal form that parses back to the same double, so emitted
/// files are byte-stable across runs and round-trip exactly.
inline std::string to_shortest(double value) {
    char buffer[40];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("to_shortest: buffer too small");
    return std::string(buffer, ptr);
}

/// Inverse of to_shortest; rejects trailing junk.
inline double parse_double(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw std::invalid_argument("parse_double: not a number: \"" + text + "\"");
    }
    return value;
}

} // namespace laura::util
