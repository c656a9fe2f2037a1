#pragma once

#include <charconv>
#include <string>

namespace infodiff::detail {

/// Shortest decimal text that parses back to exactly `x`.
inline std::string shortest_decimal(double x)
{
    char buffer[32];
    const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
    return std::string(buffer, result.ptr);
}

} // namespace infodiff::detail
