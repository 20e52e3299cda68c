#include "propp/analytic_constants.hpp"

#include "propp/constructor.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/prime_engine.hpp"
#include "propp/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>
#include <string>

namespace propp {

namespace {

constexpr std::size_t kBlock = std::size_t{1} << 16;

// Neumaier-compensated sum of term(p) over the primes <= limit. Blocks of
// kBlock consecutive primes are summed in increasing order and the block
// partials are combined in order, so the result is bit-identical for any
// worker count.
template <class Term>
double prime_sum(std::uint64_t limit, Term term)
{
    const auto table = shared_table(limit);
    const auto primes = table->primes().first(table->prime_count_upto(limit));
    const std::size_t blocks = (primes.size() + kBlock - 1) / kBlock;

    struct Partial {
        double sum = 0.0;
        double carry = 0.0;
    };
    auto add = [](Partial& acc, double v) {
        const double t = acc.sum + v;
        if (std::fabs(acc.sum) >= std::fabs(v))
            acc.carry += (acc.sum - t) + v;
        else
            acc.carry += (v - t) + acc.sum;
        acc.sum = t;
    };
    const auto partials = parallel_map<Partial>(blocks, [&](std::size_t b) {
        Partial acc;
        const std::size_t end = std::min(primes.size(), (b + 1) * kBlock);
        for (std::size_t t = b * kBlock; t < end; ++t)
            add(acc, term(primes[t]));
        return acc;
    });
    Partial total;
    for (const auto& part : partials) {
        add(total, part.sum);
        add(total, part.carry);
    }
    return total.sum + total.carry;
}

double lam(std::uint64_t p)
{
    return p % 4 == 3 ? 1.0 : 0.0;
}

double log1m_inv(std::uint64_t p)
{
    return std::log1p(-1.0 / static_cast<double>(p));
}

void require_constant_limit(const char* what, std::uint64_t limit, std::uint64_t floor)
{
    if (limit < floor)
        throw DomainError(std::string(what) + ": truncation " + std::to_string(limit) + " is below " +
                          std::to_string(floor));
}

void require_h_args(const char* what, double x, std::uint64_t plimit)
{
    if (!(x >= 0.0 && x <= 2.0))
        throw DomainError(std::string(what) + ": x = " + std::to_string(x) + " outside [0, 2]");
    require_constant_limit(what, plimit, 10'000);
}

// Unguarded so that the numeric derivative may step slightly below 0.
double log_euler_product(double x, std::uint64_t plimit)
{
    return prime_sum(plimit, [x](std::uint64_t p) {
        return 0.5 * x * log1m_inv(p) + (p % 4 == 3 ? std::log1p(x / static_cast<double>(p)) : 0.0);
    });
}

double h_raw(double x, std::uint64_t plimit)
{
    return std::exp(log_euler_product(x, plimit)) / gamma_fn(x / 2.0 + 1.0);
}

const char* kTruncationNote =
    "truncated partial sum over p <= truncation in increasing order; "
    "the omitted tail is O(1/log truncation) and oscillates with the class balance";

} // namespace

ConstantEstimate mertens_M34(std::uint64_t limit)
{
    require_constant_limit("mertens_M34", limit, 1'000);
    const double s = prime_sum(limit, [](std::uint64_t p) { return lam(p) / static_cast<double>(p); });
    const double ll = std::log(std::log(static_cast<double>(limit)));
    return {"M(3,4)", s - ll / 2.0, limit, kTruncationNote};
}

ConstantEstimate c34(std::uint64_t limit)
{
    require_constant_limit("c34", limit, 1'000);
    const double s = prime_sum(limit, [](std::uint64_t p) {
        return log1m_inv(p) + 2.0 * lam(p) / static_cast<double>(p);
    });
    return {"C(3,4)", kEulerGamma + s, limit, kTruncationNote};
}

SquareReciprocalSum lambda_p2_sum(std::uint64_t limit)
{
    require_constant_limit("lambda_p2_sum", limit, 10'000);
    const double s = prime_sum(limit, [](std::uint64_t p) {
        const double dp = static_cast<double>(p);
        return lam(p) / (dp * dp);
    });
    SquareReciprocalSum out;
    out.estimate = {"sum lambda(p)/p^2", s, limit,
                    "partial sum; the tail over p > truncation is below sum_{n > truncation} 1/n^2 < 1/truncation"};
    out.upper_bound = s + 1.0 / static_cast<double>(limit);
    return out;
}

GammaTriple gamma_triple(double x)
{
    if (!(x >= 0.0 && x <= 4.0))
        throw DomainError("gamma_triple: x = " + std::to_string(x) + " outside [0, 4]");
    const double t = x / 2.0 + 1.0;
    const double g = gamma_fn(t);
    const double psi = digamma(t);
    return {x, g, g * psi, g * (psi * psi + trigamma(t))};
}

double euler_product(double x, std::uint64_t plimit)
{
    require_h_args("euler_product", x, plimit);
    return std::exp(log_euler_product(x, plimit));
}

double h_eval(double x, std::uint64_t plimit)
{
    require_h_args("h_eval", x, plimit);
    return h_raw(x, plimit);
}

double prime_log_sum(double x, std::uint64_t plimit)
{
    require_h_args("prime_log_sum", x, plimit);
    return prime_sum(plimit, [x](std::uint64_t p) {
        return 0.5 * log1m_inv(p) + lam(p) / (static_cast<double>(p) + x);
    });
}

double prime_square_sum(double x, std::uint64_t plimit)
{
    require_h_args("prime_square_sum", x, plimit);
    return prime_sum(plimit, [x](std::uint64_t p) {
        const double d = static_cast<double>(p) + x;
        return lam(p) / (d * d);
    });
}

double f_factor(double x, std::uint64_t plimit)
{
    require_h_args("f_factor", x, plimit);
    const auto g = gamma_triple(x);
    const double s1 = prime_log_sum(x, plimit);
    const double s2 = prime_square_sum(x, plimit);
    const double G = g.gamma;
    return s1 * s1 / G - g.gamma2 / (4.0 * G * G) - s2 / G - g.gamma1 * s1 / (G * G) +
           g.gamma1 * g.gamma1 / (2.0 * G * G * G);
}

double h_second(double x, std::uint64_t plimit, DerivativeMethod method)
{
    require_h_args("h_second", x, plimit);
    if (method == DerivativeMethod::analytic)
        return f_factor(x, plimit) * euler_product(x, plimit);

    constexpr double step = 1e-4;
    auto second_difference = [&](double hstep) {
        return (h_raw(x + hstep, plimit) - 2.0 * h_raw(x, plimit) + h_raw(x - hstep, plimit)) / (hstep * hstep);
    };
    const double coarse = second_difference(step);
    const double fine = second_difference(step / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

double corollary_constant(double arg, std::uint64_t c34_limit, std::uint64_t h_limit)
{
    if (!(arg >= 99.0 / 300.0 && arg <= 101.0 / 300.0))
        throw DomainError("corollary_constant: argument " + std::to_string(arg) + " outside [99/300, 101/300]");
    return 1.0 + c34(c34_limit).value / 2.0 + h_second(arg, h_limit, DerivativeMethod::analytic) / 2.0;
}

double log_envelope(LogScale x)
{
    if (!(x.ln_x > 0.0) || !(x.ln2() > 1.0 + 1e-12))
        throw DomainError("envelope: ln ln ln x must be positive (x > e^e)");
    const double l3 = x.ln3();
    return 0.5 * x.ln_x - 0.5 * std::log(x.ln_x) - 2.0 * std::log(x.ln2()) - 2.0 * std::log(l3);
}

double envelope(double x)
{
    if (!(x > 1.0))
        throw DomainError("envelope: ln x must be positive");
    return std::exp(log_envelope(LogScale::of(x)));
}

TheoremTerms theorem_terms(LogScale x, long long j)
{
    const auto window = contribution_window(x);
    if (j < 2 || j > window.l)
        throw DomainError("theorem_terms: j = " + std::to_string(j) + " outside [2, " + std::to_string(window.l) + "]");

    TheoremTerms out;
    out.k = window.k;
    out.j = j;
    const double m = static_cast<double>(window.k + j);
    const double L = x.loglog_sqrt();

    // y = x / (16 m^4 ln^4 m); F1 = sqrt(y) / ln sqrt(y).
    const double ln_y = x.ln_x - std::log(16.0) - 4.0 * std::log(m) - 4.0 * std::log(std::log(m));
    const double ln_sqrt_y = ln_y / 2.0;
    out.log_f1 = ln_sqrt_y - std::log(ln_sqrt_y);
    out.log_f2 = (m - 1.0) * std::log(std::log(ln_sqrt_y)) - m * std::numbers::ln2 - std::lgamma(m);

    const double jd = static_cast<double>(j);
    out.log_f2_lower = 0.5 * std::log(x.ln_x) - 0.5 * std::log(x.ln2()) + (jd - 2.0) +
                       (L / 2.0 + jd - 1.0) * std::log(L / (L + 2.0 * (jd - 1.0)));
    out.bracket = std::pow(1.0 + 2.0 * (jd - 1.0) / L, 1.0 - jd);
    out.log_f1_reference = 0.5 * x.ln_x - std::log(x.ln_x) - 2.0 * std::log(x.ln2()) - 2.0 * std::log(x.ln3());
    return out;
}

double spread(const std::vector<ConstantEstimate>& estimates)
{
    if (estimates.empty())
        return 0.0;
    auto [lo, hi] = std::minmax_element(estimates.begin(), estimates.end(),
                                        [](const auto& a, const auto& b) { return a.value < b.value; });
    return hi->value - lo->value;
}

} // namespace propp
