#pragma once

#include "propp/constructor.hpp"
#include "propp/uint128.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace propp {

struct CountSReport {
    u128 limit = 0;
    // (i, |S_i ∩ [1, limit]|) for every i with min(S_i) <= limit.
    std::vector<std::pair<std::size_t, std::uint64_t>> per_index;
    std::uint64_t total = 0;
    std::optional<double> envelope;
    // |{q_i^2 <= limit}| and its asymptotic sqrt(limit) / ln sqrt(limit).
    std::uint64_t baseline_count = 0;
    double baseline_asymptotic = 0.0;
};

CountSReport count_s(u128 limit, const ConstructOptions& options = {});

} // namespace propp
