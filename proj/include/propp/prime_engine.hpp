#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace propp {

// Default cap on sieve limits. A table at this limit holds ~5·10^7 primes.
inline constexpr std::uint64_t kDefaultSieveBudget = 1'000'000'000;

// All primes up to a limit, plus the order-preserving sublist of primes
// congruent to 3 mod 4. Immutable once built; share freely across threads.
class PrimeTable {
public:
    PrimeTable() = default;

    std::uint64_t limit() const { return limit_; }
    std::span<const std::uint64_t> primes() const { return primes_; }
    std::span<const std::uint64_t> class3() const { return class3_; }

    // q_i, the i-th prime congruent to 3 mod 4 (1-based). Throws DomainError
    // for i == 0 or i beyond this table.
    std::uint64_t q(std::size_t i) const;

    // Number of class-3 primes <= v (v may exceed limit only if callers
    // know the table is complete up to v).
    std::size_t class3_count_upto(std::uint64_t v) const;
    std::size_t prime_count_upto(std::uint64_t v) const;

    friend PrimeTable sieve(std::uint64_t limit, std::uint64_t budget);

private:
    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
    std::vector<std::uint64_t> class3_;
};

// Segmented sieve of Eratosthenes. Throws DomainError for limit < 2 and
// ResourceError when limit exceeds budget. Output is independent of the
// worker count.
PrimeTable sieve(std::uint64_t limit, std::uint64_t budget = kDefaultSieveBudget);

// Indicator of the class 3 mod 4 on primes. Throws DomainError if p is not
// prime. lambda(2) == 0.
int lambda(std::uint64_t p);

// q_i from a process-wide table that doubles its limit until q_i is present.
std::uint64_t nth_q(std::size_t i);

// q_i / (2 i ln i), defined for i >= 2.
double q_growth_ratio(std::size_t i);

// Shared table with limit >= the request; may be larger than asked.
std::shared_ptr<const PrimeTable> shared_table(std::uint64_t min_limit);

// pi(v; 4, 3) for every v of the form floor(x / n), computed with the
// Lucy-Hedgehog recursion on the counts of all primes and of the primes
// weighted by the non-principal character mod 4. O(x^{3/4}) time and
// O(sqrt x) memory.
class Class3Counts {
public:
    explicit Class3Counts(std::uint64_t x);

    std::uint64_t x() const { return x_; }

    // Requires v == floor(x / n) for some n >= 1.
    std::uint64_t at(std::uint64_t v) const;

private:
    std::uint64_t x_;
    std::uint64_t root_;
    std::vector<std::int64_t> small_; // index v for v <= root
    std::vector<std::int64_t> large_; // index n for v = x / n > root
};

} // namespace propp
