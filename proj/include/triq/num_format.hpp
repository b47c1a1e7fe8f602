#pragma once

#include <charconv>
#include <stdexcept>
#include <string>
#include <string_view>

namespace triq {

// Shortest decimal string that round-trips to the same double.
inline std::string shortest(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument("parse_double: malformed number '" + std::string(s) + "'");
    return v;
}

}  // namespace triq
