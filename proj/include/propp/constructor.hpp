#pragma once

#include "propp/log_scale.hpp"
#include "propp/prime_engine.hpp"
#include "propp/uint128.hpp"

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace propp {

// One member q_i^4 * nu^2 of S_i, where nu is a product of exactly i
// distinct primes congruent to 3 mod 4.
struct SetElement {
    u128 value = 0;
    std::size_t set_index = 0;
    std::vector<std::uint64_t> nu_factors; // ascending

    friend bool operator==(const SetElement&, const SetElement&) = default;
};

struct ConstructOptions {
    // Forbid q_i itself as a factor of nu.
    bool exclude_qi = false;
    // Largest prime the enumeration may need to sieve for.
    std::uint64_t sieve_budget = kDefaultSieveBudget;
    // Largest number of elements a single call may materialize.
    std::size_t max_elements = 50'000'000;
};

std::vector<SetElement> enumerate_S_i(std::size_t i, u128 limit, const ConstructOptions& options = {});
std::uint64_t count_S_i(std::size_t i, u128 limit, const ConstructOptions& options = {});

// Sorted union of S_1, S_2, ... restricted to [1, limit].
std::vector<SetElement> enumerate_S(u128 limit, const ConstructOptions& options = {});

// min(S_i) = q_i^4 times the square of the i smallest admissible primes.
// Throws OverflowError if it does not fit 128 bits.
u128 min_of_S_i(std::size_t i, const ConstructOptions& options = {});

// Largest i with min(S_i) <= limit, or 0.
std::size_t max_set_index(u128 limit, const ConstructOptions& options = {});

// {q_i^2 <= limit}.
std::vector<u128> baseline_squares(u128 limit);

// The block x - floor(x/3), ..., x.
std::vector<u128> finite_block(std::uint64_t x);

// The sets S_lo..S_hi that carry the counting-function lower bound at x:
// lo = k + 2 and hi = k + l with k = floor(t), l = floor(sqrt t) and
// t = ln ln sqrt(x) / 2. Throws DomainError unless k >= 2 and l >= 2.
struct IndexWindow {
    long long lo = 0;
    long long hi = 0;
    long long k = 0;
    long long l = 0;
};
IndexWindow contribution_window(LogScale x);

} // namespace propp
