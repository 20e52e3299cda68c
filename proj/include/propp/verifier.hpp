#pragma once

#include "propp/constructor.hpp"
#include "propp/uint128.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace propp {

// Outcome of a Property P check: no a_i divides a_j + a_k for i < j < k.
struct Verdict {
    bool holds = true;
    // Values (a_i, a_j, a_k) and 0-based positions of the lexicographically
    // smallest violating index triple.
    std::optional<std::array<u128, 3>> witness;
    std::optional<std::array<std::size_t, 3>> witness_index;
    // Index triples examined in lexicographic order up to and including
    // the witness (all C(n, 3) when the property holds).
    u128 triples_checked = 0;
    std::size_t length = 0;
};

struct VerifyOptions {
    // 5·10^9 triples is a sequence of about 3100 elements.
    u128 max_triples = 5'000'000'000ULL;
    bool force = false;
};

// Exhaustive lexicographic scan. Throws FormatError on non-ascending input
// and ResourceError when C(n, 3) exceeds max_triples without force.
Verdict check_property_p(std::span<const u128> seq, const VerifyOptions& options = {});

enum class Lemma1Outcome { applicable_verified, applicable_violated, not_applicable };

struct Lemma1Result {
    Lemma1Outcome outcome = Lemma1Outcome::not_applicable;
    // Smallest prime p = 3 mod 4 with p | n1 and p not dividing gcd(n2, n3).
    std::optional<std::uint64_t> prime;
};

// Looks for the hypothesis prime; when one exists, tests n1^2 | n2^2 + n3^2
// exactly. Throws DomainError if any input is 0.
Lemma1Result check_lemma1(std::uint64_t n1, std::uint64_t n2, std::uint64_t n3);

const char* to_string(Lemma1Outcome outcome);

// check_property_p on enumerate_S(limit).
Verdict check_union_property_p(u128 limit, const ConstructOptions& construct = {},
                               const VerifyOptions& options = {});

} // namespace propp
