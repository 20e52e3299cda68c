#pragma once

#include <cstdint>
#include <vector>

namespace propp {

// Deterministic Miller-Rabin for the full 64-bit range.
bool is_prime(std::uint64_t n);

// Prime factorization (ascending, with multiplicity) via trial division by
// small primes followed by Pollard-Brent rho. factorize(1) is empty.
std::vector<std::uint64_t> factorize(std::uint64_t n);

// Distinct prime factors, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);

} // namespace propp
