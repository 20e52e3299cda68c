#pragma once

#include "propp/log_scale.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace propp {

inline constexpr std::uint64_t kConstantsPrimeLimit = 100'000'000;
inline constexpr std::uint64_t kHPrimeLimit = 1'000'000;

// A constant approximated by a sum or product over the primes p <= truncation.
struct ConstantEstimate {
    std::string name;
    double value = 0.0;
    std::uint64_t truncation = 0;
    std::string error_note;
};

// sum_{p <= limit} lambda(p)/p - (ln ln limit)/2. Requires limit >= 10^3.
ConstantEstimate mertens_M34(std::uint64_t limit);

// gamma + sum_{p <= limit} (ln(1 - 1/p) + 2 lambda(p)/p). Requires limit >= 10^3.
ConstantEstimate c34(std::uint64_t limit);

// sum_{p <= limit} lambda(p)/p^2, plus the tail bound value + 1/limit that
// follows from sum_{n > limit} 1/n^2 < 1/limit. Requires limit >= 10^4.
struct SquareReciprocalSum {
    ConstantEstimate estimate;
    double upper_bound = 0.0;
};
SquareReciprocalSum lambda_p2_sum(std::uint64_t limit);

// Gamma and its first two derivatives at x/2 + 1, for x in [0, 4].
struct GammaTriple {
    double x = 0.0;
    double gamma = 0.0;
    double gamma1 = 0.0;
    double gamma2 = 0.0;
};
GammaTriple gamma_triple(double x);

// The h-family below accepts x in [0, 2] and plimit >= 10^4. Prime sums and
// products run over p <= plimit in increasing order.

// prod_p (1 - 1/p)^{x/2} (1 + x lambda(p)/p), accumulated in log space.
double euler_product(double x, std::uint64_t plimit);

// euler_product(x) / Gamma(x/2 + 1).
double h_eval(double x, std::uint64_t plimit);

// sum_p ((1/2) ln(1 - 1/p) + lambda(p)/(p + x)).
double prime_log_sum(double x, std::uint64_t plimit);

// sum_p lambda(p)/(p + x)^2.
double prime_square_sum(double x, std::uint64_t plimit);

// The five-term factor f with h'' = f * euler_product.
double f_factor(double x, std::uint64_t plimit);

enum class DerivativeMethod { analytic, numeric };

// analytic: f_factor * euler_product. numeric: central second difference of
// h_eval with step 1e-4 and one Richardson extrapolation.
double h_second(double x, std::uint64_t plimit, DerivativeMethod method);

// 1 + C(3,4)/2 + h''(arg)/2 for arg in [99/300, 101/300].
double corollary_constant(double arg, std::uint64_t c34_limit = kConstantsPrimeLimit,
                          std::uint64_t h_limit = kHPrimeLimit);

// sqrt(x) / (sqrt(ln x) (ln ln x)^2 (ln ln ln x)^2), defined where
// ln ln ln x > 0, i.e. x > e^e.
double envelope(double x);
double log_envelope(LogScale x);

// The factors of the lower bound for S_{k+j}(x), with k and l from
// contribution_window. All magnitudes are natural logs.
struct TheoremTerms {
    long long k = 0;
    long long j = 0;
    double log_f1 = 0.0;
    double log_f2 = 0.0;
    double log_f2_lower = 0.0;
    // (1 + 2(j - 1)/ln ln sqrt(x))^{1 - j}, claimed >= 1/e.
    double bracket = 0.0;
    // ln of sqrt(x) / (ln x (ln ln x)^2 (ln ln ln x)^2), the F1 comparison.
    double log_f1_reference = 0.0;
};
TheoremTerms theorem_terms(LogScale x, long long j);

// max - min of a partial-sum estimate across several truncations.
double spread(const std::vector<ConstantEstimate>& estimates);

} // namespace propp
