#pragma once

#include "propp/log_scale.hpp"
#include "propp/uint128.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace propp::cli {

inline constexpr int kSchemaVersion = 1;

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Exact integers written as digits or as <mantissa>e<exponent>, e.g. "1e18"
// or "2.5e3". Throws FormatError when the value is not an integer.
u128 parse_integer(std::string_view text);

// Positive reals of any magnitude, e.g. "1e3000", as their natural log.
LogScale parse_log_scale(std::string_view text);

} // namespace propp::cli
