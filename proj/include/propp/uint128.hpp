#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace propp {

using u128 = unsigned __int128;

inline constexpr u128 kU128Max = ~static_cast<u128>(0);

// Largest value that a JSON consumer reading IEEE doubles sees exactly.
inline constexpr u128 kJsonExactMax = static_cast<u128>(1) << 53;

std::string to_string(u128 value);

// Parses a non-empty string of decimal digits. Throws FormatError on any
// other character and OverflowError if the value needs more than 128 bits.
u128 parse_u128(std::string_view text);

// Overflow-checked arithmetic. Throw OverflowError instead of wrapping.
u128 checked_mul(u128 a, u128 b);
u128 checked_add(u128 a, u128 b);
u128 checked_pow(u128 base, unsigned exponent);

// Returns false instead of throwing; out is untouched on overflow.
inline bool mul_fits(u128 a, u128 b, u128& out)
{
    if (a != 0 && b > kU128Max / a)
        return false;
    out = a * b;
    return true;
}

// floor(sqrt(n)) for the full 128-bit range.
u128 isqrt(u128 n);

// floor(n^(1/k)) for k >= 1.
u128 iroot(u128 n, unsigned k);

inline double to_double(u128 v)
{
    return static_cast<double>(v);
}

} // namespace propp
