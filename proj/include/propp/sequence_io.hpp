#pragma once

#include "propp/uint128.hpp"

#include <iosfwd>
#include <span>
#include <vector>

namespace propp {

// Sequence files: one decimal integer per line, strictly ascending, entries
// >= 1, no blank lines, newline-terminated. Any deviation is a FormatError.
std::vector<u128> read_sequence(std::istream& in);
void write_sequence(std::ostream& out, std::span<const u128> values);

// Throws FormatError unless values is strictly ascending with entries >= 1.
void require_ascending(std::span<const u128> values);

} // namespace propp
