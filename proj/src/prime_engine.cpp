#include "propp/prime_engine.hpp"

#include "propp/arith.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/uint128.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>

namespace propp {

namespace {

constexpr std::uint64_t kSegmentSpan = std::uint64_t{1} << 20;

std::vector<std::uint64_t> simple_sieve(std::uint64_t limit)
{
    std::vector<char> composite(limit + 1, 0);
    std::vector<std::uint64_t> out;
    for (std::uint64_t n = 2; n <= limit; ++n) {
        if (composite[n])
            continue;
        out.push_back(n);
        for (std::uint64_t m = n * n; m <= limit; m += n)
            composite[m] = 1;
    }
    return out;
}

// Odd primes in [lo, hi], lo odd.
std::vector<std::uint64_t> sieve_segment(std::uint64_t lo, std::uint64_t hi,
                                         std::span<const std::uint64_t> base)
{
    const std::uint64_t count = (hi - lo) / 2 + 1;
    std::vector<char> composite(count, 0);
    for (std::uint64_t p : base) {
        if (p == 2)
            continue;
        if (p * p > hi)
            break;
        std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
        if (start % 2 == 0)
            start += p;
        for (std::uint64_t m = start; m <= hi; m += 2 * p)
            composite[(m - lo) / 2] = 1;
    }
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < count; ++i)
        if (!composite[i])
            out.push_back(lo + 2 * i);
    return out;
}

} // namespace

PrimeTable sieve(std::uint64_t limit, std::uint64_t budget)
{
    if (limit < 2)
        throw DomainError("sieve: limit must be at least 2, got " + std::to_string(limit));
    if (limit > budget)
        throw ResourceError("sieve: limit " + std::to_string(limit) +
                            " exceeds the configured budget " + std::to_string(budget));

    const auto root = static_cast<std::uint64_t>(isqrt(limit));
    const auto base = simple_sieve(root);

    PrimeTable table;
    table.limit_ = limit;
    table.primes_.push_back(2);

    if (limit >= 3) {
        const std::uint64_t tasks = (limit - 3) / kSegmentSpan + 1;
        auto parts = parallel_map<std::vector<std::uint64_t>>(tasks, [&](std::size_t t) {
            const std::uint64_t lo = 3 + t * kSegmentSpan;
            const std::uint64_t hi = std::min(limit, lo + kSegmentSpan - 1);
            return sieve_segment(lo, hi, base);
        });
        std::size_t total = 1;
        for (const auto& part : parts)
            total += part.size();
        table.primes_.reserve(total);
        for (const auto& part : parts)
            table.primes_.insert(table.primes_.end(), part.begin(), part.end());
    }

    for (std::uint64_t p : table.primes_)
        if (p % 4 == 3)
            table.class3_.push_back(p);
    return table;
}

std::uint64_t PrimeTable::q(std::size_t i) const
{
    if (i == 0)
        throw DomainError("q_i is 1-based; i = 0 is invalid");
    if (i > class3_.size())
        throw DomainError("q_" + std::to_string(i) + " lies beyond sieve limit " + std::to_string(limit_));
    return class3_[i - 1];
}

std::size_t PrimeTable::class3_count_upto(std::uint64_t v) const
{
    return static_cast<std::size_t>(std::upper_bound(class3_.begin(), class3_.end(), v) - class3_.begin());
}

std::size_t PrimeTable::prime_count_upto(std::uint64_t v) const
{
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), v) - primes_.begin());
}

int lambda(std::uint64_t p)
{
    if (!is_prime(p))
        throw DomainError("lambda: " + std::to_string(p) + " is not prime");
    return p % 4 == 3 ? 1 : 0;
}

namespace {
std::mutex g_table_mutex;
std::shared_ptr<const PrimeTable> g_table;
} // namespace

std::shared_ptr<const PrimeTable> shared_table(std::uint64_t min_limit)
{
    std::lock_guard lock(g_table_mutex);
    if (!g_table || g_table->limit() < min_limit)
        g_table = std::make_shared<const PrimeTable>(sieve(std::max<std::uint64_t>(min_limit, 2)));
    return g_table;
}

std::uint64_t nth_q(std::size_t i)
{
    if (i == 0)
        throw DomainError("nth_q: i must be at least 1");
    auto table = shared_table(64);
    std::uint64_t limit = table->limit();
    while (table->class3().size() < i) {
        limit *= 2;
        table = shared_table(limit);
    }
    return table->q(i);
}

double q_growth_ratio(std::size_t i)
{
    if (i < 2)
        throw DomainError("q_growth_ratio: i must be at least 2 (ln i vanishes at i = 1)");
    const double di = static_cast<double>(i);
    return static_cast<double>(nth_q(i)) / (2.0 * di * std::log(di));
}

Class3Counts::Class3Counts(std::uint64_t x)
    : x_(x), root_(static_cast<std::uint64_t>(isqrt(x)))
{
    if (x < 1)
        throw DomainError("Class3Counts: x must be at least 1");

    // Seeds: count of integers in [2, v] and sum of chi_4 over [2, v].
    auto count_init = [](std::uint64_t v) { return static_cast<std::int64_t>(v) - 1; };
    auto chi_init = [](std::uint64_t v) -> std::int64_t {
        const auto r = v % 4;
        return (r == 1 || r == 2 ? 1 : 0) - 1;
    };

    std::vector<std::int64_t> cs(root_ + 1), hs(root_ + 1);
    std::vector<std::int64_t> cl(root_ + 1), hl(root_ + 1);
    for (std::uint64_t v = 1; v <= root_; ++v) {
        cs[v] = count_init(v);
        hs[v] = chi_init(v);
    }
    for (std::uint64_t n = 1; n <= root_; ++n) {
        cl[n] = count_init(x / n);
        hl[n] = chi_init(x / n);
    }

    for (std::uint64_t p = 2; p <= root_; ++p) {
        if (cs[p] == cs[p - 1])
            continue;
        const std::int64_t c_prev = cs[p - 1];
        const std::int64_t h_prev = hs[p - 1];
        const std::int64_t chi = p == 2 ? 0 : (p % 4 == 1 ? 1 : -1);
        const std::uint64_t p2 = p * p;
        const std::uint64_t nmax = std::min(root_, x / p2);
        // v = x / n runs downward, so every lookup below still sees the
        // values from before this prime was processed.
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            const std::uint64_t np = n * p;
            const bool large = np <= root_;
            const std::int64_t c_sub = large ? cl[np] : cs[x / np];
            const std::int64_t h_sub = large ? hl[np] : hs[x / np];
            cl[n] -= c_sub - c_prev;
            hl[n] -= chi * (h_sub - h_prev);
        }
        for (std::uint64_t v = root_; v >= p2; --v) {
            cs[v] -= cs[v / p] - c_prev;
            hs[v] -= chi * (hs[v / p] - h_prev);
        }
    }

    // Odd primes split as (#1 mod 4) + (#3 mod 4), and the character sum is
    // their difference.
    auto class3 = [](std::uint64_t v, std::int64_t count, std::int64_t chisum) {
        const std::int64_t odd = v >= 2 ? count - 1 : 0;
        return (odd - chisum) / 2;
    };
    small_.assign(root_ + 1, 0);
    large_.assign(root_ + 1, 0);
    for (std::uint64_t v = 1; v <= root_; ++v)
        small_[v] = class3(v, cs[v], hs[v]);
    for (std::uint64_t n = 1; n <= root_; ++n)
        large_[n] = class3(x / n, cl[n], hl[n]);
}

std::uint64_t Class3Counts::at(std::uint64_t v) const
{
    if (v <= root_)
        return static_cast<std::uint64_t>(small_[v]);
    const std::uint64_t n = x_ / v;
    if (n == 0 || x_ / n != v)
        throw DomainError("Class3Counts: " + std::to_string(v) + " is not of the form floor(x/n)");
    return static_cast<std::uint64_t>(large_[n]);
}

} // namespace propp
