#pragma once

#include "propp/log_scale.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace propp {

inline constexpr std::uint64_t kMaxExactX = 10'000'000'000ULL;

// pi_k(x; 4, 3): squarefree n <= x with exactly k prime factors, all = 3 mod 4.
// The first k - 1 factors are enumerated in ascending order with pruning and
// the last is counted from a Class3Counts table. Throws ResourceError above
// kMaxExactX and DomainError for x == 0 or k == 0.
std::uint64_t pi_k_exact(std::uint64_t x, unsigned k);

// x (ln ln x)^{k-1} / ((k-1)! ln x). Needs x > 1 for k = 1 and x > e^e
// otherwise.
double landau_term(double x, unsigned k);

enum class MengMode { main, full };

struct MengParams {
    // Uniformity constant A in 2 <= k <= A ln ln x.
    double uniformity = 2.0;
    // C(3,4); when unset, computed once at the default truncation.
    std::optional<double> c34;
    std::uint64_t h_plimit = 1'000'000;
};

struct MengEstimate {
    double value = 0.0;
    double main = 0.0;
    // The bracket 1 + (k-1) C / L + 2 (k-1)(k-2) h''(2(k-3)/(3L)) / L^2.
    double correction = 1.0;
    // k^2 / L^3, the scale of the omitted error term.
    double dropped_scale = 0.0;
};

// The bracketed correction alone, for x beyond double range.
double meng_correction(LogScale x, unsigned k, const MengParams& params = {});

MengEstimate meng_breakdown(double x, unsigned k, MengMode mode, const MengParams& params = {});
double meng_estimate(double x, unsigned k, MengMode mode, const MengParams& params = {});

// Admissible k for the lower bound: ceil(L/2 - 1) .. floor(L/2 + sqrt(L/2))
// with L = ln ln x, intersected with k >= 2.
struct KWindow {
    long long lo = 0;
    long long hi = 0;
};
KWindow corollary_window(LogScale x);

inline constexpr double kCorollaryConstant = 0.802;

// kCorollaryConstant * meng_estimate(x, k, main); DomainError outside the window.
double corollary_lower_bound(double x, unsigned k, const MengParams& params = {});

struct CountReport {
    std::uint64_t x = 0;
    unsigned k = 0;
    std::uint64_t exact = 0;
    double landau = 0.0;
    // Unset where the Meng expansion is not defined (k = 1 or k > A ln ln x).
    std::optional<double> meng_main;
    std::optional<double> meng_full;
    std::optional<double> ratio;
    std::optional<double> dropped_scale;
};

std::vector<CountReport> compare(std::span<const std::uint64_t> x_grid, std::span<const unsigned> k_set,
                                 const MengParams& params = {});

} // namespace propp
