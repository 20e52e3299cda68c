#include "propp/verifier.hpp"

#include "propp/arith.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/sequence_io.hpp"

#include <atomic>
#include <numeric>
#include <string>
#include <vector>

namespace propp {

namespace {

u128 choose3(u128 n)
{
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

struct PairHit {
    std::size_t j = 0;
    std::size_t k = 0;
};

// First (j, k) with i < j < k and seq[i] | seq[j] + seq[k]. Works on
// residues so the sum never leaves 128 bits.
std::optional<PairHit> scan_outer(std::span<const u128> seq, std::size_t i, std::vector<u128>& residues)
{
    const u128 a = seq[i];
    const std::size_t n = seq.size();
    residues.resize(n);
    for (std::size_t t = i + 1; t < n; ++t)
        residues[t] = seq[t] % a;
    for (std::size_t j = i + 1; j + 1 < n; ++j) {
        const u128 need = residues[j] == 0 ? 0 : a - residues[j];
        for (std::size_t k = j + 1; k < n; ++k)
            if (residues[k] == need)
                return PairHit{j, k};
    }
    return std::nullopt;
}

} // namespace

Verdict check_property_p(std::span<const u128> seq, const VerifyOptions& options)
{
    require_ascending(seq);
    const std::size_t n = seq.size();
    const u128 total = choose3(n);
    if (total > options.max_triples && !options.force)
        throw ResourceError("sequence of " + std::to_string(n) + " elements needs " + to_string(total) +
                            " triple checks, above the cap of " + to_string(options.max_triples) +
                            " (use --force to override)");

    std::vector<std::optional<PairHit>> hits(n);
    std::atomic<std::size_t> first_hit{n};
    parallel_for(n, [&](std::size_t i) {
        if (i > first_hit.load())
            return;
        std::vector<u128> residues;
        hits[i] = scan_outer(seq, i, residues);
        if (hits[i]) {
            std::size_t cur = first_hit.load();
            while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
            }
        }
    });

    Verdict v;
    v.length = n;
    const std::size_t i = first_hit.load();
    if (i == n) {
        v.triples_checked = total;
        return v;
    }
    const auto [j, k] = *hits[i];
    v.holds = false;
    v.witness = std::array<u128, 3>{seq[i], seq[j], seq[k]};
    v.witness_index = std::array<std::size_t, 3>{i, j, k};
    // Outer indices before i are complete; then rows i+1..j-1 of pairs, then
    // the partial row j.
    u128 checked = total - choose3(n - i);
    for (std::size_t jj = i + 1; jj < j; ++jj)
        checked += n - 1 - jj;
    checked += k - j;
    v.triples_checked = checked;
    return v;
}

Lemma1Result check_lemma1(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3)
{
    if (n1 == 0 || n2 == 0 || n3 == 0)
        throw DomainError("lemma1: inputs must be positive integers");

    Lemma1Result result;
    const std::uint64_t g = std::gcd(n2, n3);
    for (auto p : distinct_prime_factors(n1)) {
        if (p % 4 == 3 && g % p != 0) {
            result.prime = p;
            break;
        }
    }
    if (!result.prime)
        return result;

    // n1 < 2^64, so n1^2 fits; add residues via the complement to avoid
    // overflowing the sum.
    const u128 m = static_cast<u128>(n1) * n1;
    const u128 r2 = static_cast<u128>(n2) * n2 % m;
    const u128 r3 = static_cast<u128>(n3) * n3 % m;
    const bool divides = r2 == (r3 == 0 ? 0 : m - r3);
    result.outcome = divides ? Lemma1Outcome::applicable_violated : Lemma1Outcome::applicable_verified;
    return result;
}

const char* to_string(Lemma1Outcome outcome)
{
    switch (outcome) {
    case Lemma1Outcome::applicable_verified:
        return "applicable+verified";
    case Lemma1Outcome::applicable_violated:
        return "applicable+violated";
    case Lemma1Outcome::not_applicable:
        return "not-applicable";
    }
    return "?";
}

Verdict check_union_property_p(u128 limit, const ConstructOptions& construct, const VerifyOptions& options)
{
    const auto elements = enumerate_S(limit, construct);
    std::vector<u128> values;
    values.reserve(elements.size());
    for (const auto& e : elements)
        values.push_back(e.value);
    return check_property_p(values, options);
}

} // namespace propp
