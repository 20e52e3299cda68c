#include "propp/uint128.hpp"

#include "propp/errors.hpp"

#include <algorithm>
#include <cmath>

namespace propp {

std::string to_string(u128 value)
{
    if (value == 0)
        return "0";
    std::string out;
    while (value != 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

u128 parse_u128(std::string_view text)
{
    if (text.empty())
        throw FormatError("empty integer literal");
    u128 value = 0;
    for (char c : text) {
        if (c < '0' || c > '9')
            throw FormatError("invalid digit in integer literal '" + std::string(text) + "'");
        const auto digit = static_cast<unsigned>(c - '0');
        if (value > (kU128Max - digit) / 10)
            throw OverflowError("integer literal '" + std::string(text) + "' exceeds 128 bits");
        value = value * 10 + digit;
    }
    return value;
}

u128 checked_mul(u128 a, u128 b)
{
    u128 out;
    if (!mul_fits(a, b, out))
        throw OverflowError("128-bit multiplication overflow: " + to_string(a) + " * " + to_string(b));
    return out;
}

u128 checked_add(u128 a, u128 b)
{
    if (b > kU128Max - a)
        throw OverflowError("128-bit addition overflow: " + to_string(a) + " + " + to_string(b));
    return a + b;
}

u128 checked_pow(u128 base, unsigned exponent)
{
    u128 out = 1;
    for (unsigned e = 0; e < exponent; ++e)
        out = checked_mul(out, base);
    return out;
}

u128 isqrt(u128 n)
{
    if (n < 2)
        return n;
    // Seed from the double estimate, then correct in both directions.
    auto r = static_cast<u128>(std::sqrt(static_cast<long double>(n)));
    const u128 cap = (static_cast<u128>(1) << 64) - 1;
    if (r > cap)
        r = cap;
    while (r * r > n)
        --r;
    while (r < cap && (r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

u128 iroot(u128 n, unsigned k)
{
    if (k == 0)
        throw DomainError("iroot: exponent must be at least 1");
    if (k == 1 || n < 2)
        return n;
    if (k == 2)
        return isqrt(n);
    auto r = static_cast<u128>(std::pow(static_cast<long double>(n), 1.0L / k));
    auto fits = [&](u128 c) {
        u128 acc = 1;
        for (unsigned e = 0; e < k; ++e)
            if (!mul_fits(acc, c, acc) || acc > n)
                return false;
        return true;
    };
    while (r > 0 && !fits(r))
        --r;
    while (fits(r + 1))
        ++r;
    return r;
}

} // namespace propp
