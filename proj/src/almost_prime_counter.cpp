#include "propp/almost_prime_counter.hpp"

#include "propp/analytic_constants.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/prime_engine.hpp"
#include "propp/uint128.hpp"

#include <cmath>
#include <mutex>
#include <string>

namespace propp {

std::uint64_t pi_k_exact(std::uint64_t x, unsigned k)
{
    if (x == 0 || k == 0)
        throw DomainError("pi_k_exact: x and k must be at least 1");
    if (x > kMaxExactX)
        throw ResourceError("pi_k_exact: x = " + std::to_string(x) + " exceeds the feasibility guard " +
                            std::to_string(kMaxExactX));
    if (x < 3)
        return 0;

    const Class3Counts counts(x);
    if (k == 1)
        return counts.at(x);

    const auto table = shared_table(static_cast<std::uint64_t>(isqrt(x)) + 1);
    const auto ps = table->class3();

    // prefix = product of the factors chosen so far; remaining counts the
    // factors still to choose, the last of which comes from the table.
    auto rec = [&](auto&& self, std::size_t from, unsigned remaining, std::uint64_t prefix) -> std::uint64_t {
        std::uint64_t total = 0;
        for (std::size_t idx = from; idx < ps.size(); ++idx) {
            const std::uint64_t p = ps[idx];
            u128 bound = prefix;
            bool fits = true;
            for (unsigned e = 0; e < remaining && fits; ++e)
                fits = mul_fits(bound, p, bound) && bound <= x;
            if (!fits)
                break;
            const std::uint64_t m = prefix * p;
            if (remaining == 2) {
                // Last factor q with p < q <= x / m.
                const std::uint64_t upto = counts.at(x / m);
                if (upto > idx + 1)
                    total += upto - (idx + 1);
            } else {
                total += self(self, idx + 1, remaining - 1, m);
            }
        }
        return total;
    };

    std::size_t branches = 0;
    while (branches < ps.size()) {
        u128 power = 1;
        bool fits = true;
        for (unsigned e = 0; e < k && fits; ++e)
            fits = mul_fits(power, ps[branches], power) && power <= x;
        if (!fits)
            break;
        ++branches;
    }
    const auto parts = parallel_map<std::uint64_t>(branches, [&](std::size_t t) {
        const std::uint64_t p = ps[t];
        if (k == 2) {
            const std::uint64_t upto = counts.at(x / p);
            return upto > t + 1 ? upto - (t + 1) : std::uint64_t{0};
        }
        return rec(rec, t + 1, k - 1, p);
    });
    std::uint64_t total = 0;
    for (auto part : parts)
        total += part;
    return total;
}

double landau_term(double x, unsigned k)
{
    if (k == 0)
        throw DomainError("landau_term: k must be at least 1");
    if (k == 1) {
        if (!(x > 1.0))
            throw DomainError("landau_term: x must exceed 1 for k = 1");
        return x / std::log(x);
    }
    const double lx = std::log(x);
    if (!(x > 0.0) || !(std::log(lx) > 1.0))
        throw DomainError("landau_term: x must exceed e^e so that ln ln x > 1");
    const double kd = static_cast<double>(k);
    return std::exp(lx - std::log(lx) + (kd - 1.0) * std::log(std::log(lx)) - std::lgamma(kd));
}

namespace {

double default_c34()
{
    static std::once_flag once;
    static double value = 0.0;
    std::call_once(once, [] { value = c34(kConstantsPrimeLimit).value; });
    return value;
}

} // namespace

namespace {

void require_meng_domain(double L, unsigned k, const MengParams& params)
{
    if (!(L > 1.0))
        throw DomainError("meng_estimate: x must exceed e^e");
    if (k < 2)
        throw DomainError("meng_estimate: k must be at least 2");
    if (static_cast<double>(k) > params.uniformity * L)
        throw DomainError("meng_estimate: k = " + std::to_string(k) + " exceeds the uniformity bound A ln ln x = " +
                          std::to_string(params.uniformity * L));
}

} // namespace

double meng_correction(LogScale x, unsigned k, const MengParams& params)
{
    const double L = x.ln2();
    require_meng_domain(L, k, params);
    const double kd = static_cast<double>(k);
    const double c = params.c34 ? *params.c34 : default_c34();
    double correction = 1.0 + (kd - 1.0) / L * c;
    if (k >= 3) {
        const double arg = 2.0 * (kd - 3.0) / (3.0 * L);
        correction += 2.0 * (kd - 1.0) * (kd - 2.0) / (L * L) *
                      h_second(arg, params.h_plimit, DerivativeMethod::analytic);
    }
    return correction;
}

MengEstimate meng_breakdown(double x, unsigned k, MengMode mode, const MengParams& params)
{
    if (!(x > 1.0))
        throw DomainError("meng_estimate: x must exceed e^e");
    const double L = std::log(std::log(x));
    require_meng_domain(L, k, params);
    const double kd = static_cast<double>(k);

    MengEstimate out;
    out.main = (x / std::log(x)) * std::pow(L, kd - 1.0) / std::tgamma(kd) / std::ldexp(1.0, static_cast<int>(k));
    out.dropped_scale = kd * kd / (L * L * L);
    out.value = out.main;
    if (mode == MengMode::full) {
        out.correction = meng_correction(LogScale::of(x), k, params);
        out.value = out.main * out.correction;
    }
    return out;
}

double meng_estimate(double x, unsigned k, MengMode mode, const MengParams& params)
{
    return meng_breakdown(x, k, mode, params).value;
}

KWindow corollary_window(LogScale x)
{
    if (!(x.ln_x > 1.0))
        throw DomainError("corollary_window: ln ln x is undefined or negative");
    const double half = x.ln2() / 2.0;
    KWindow w;
    w.lo = std::max<long long>(2, -stable_floor(-(half - 1.0)));
    w.hi = stable_floor(half + std::sqrt(std::max(0.0, half)));
    if (w.lo > w.hi)
        throw DomainError("corollary_window: no admissible k (window " + std::to_string(half - 1.0) + " .. " +
                          std::to_string(half + std::sqrt(std::max(0.0, half))) + ")");
    return w;
}

double corollary_lower_bound(double x, unsigned k, const MengParams& params)
{
    if (!(x > 1.0))
        throw DomainError("corollary_lower_bound: x must exceed 1");
    const auto w = corollary_window(LogScale::of(x));
    const auto kk = static_cast<long long>(k);
    if (kk < w.lo || kk > w.hi)
        throw DomainError("corollary_lower_bound: k = " + std::to_string(k) + " outside the admissible window [" +
                          std::to_string(w.lo) + ", " + std::to_string(w.hi) + "]");
    return kCorollaryConstant * meng_estimate(x, k, MengMode::main, params);
}

std::vector<CountReport> compare(std::span<const std::uint64_t> x_grid, std::span<const unsigned> k_set,
                                 const MengParams& params)
{
    std::vector<CountReport> out;
    for (auto x : x_grid) {
        for (auto k : k_set) {
            CountReport r;
            r.x = x;
            r.k = k;
            const double xd = static_cast<double>(x);
            r.landau = landau_term(xd, k);
            r.exact = pi_k_exact(x, k);
            const double L = std::log(std::log(xd));
            if (k >= 2 && static_cast<double>(k) <= params.uniformity * L) {
                const auto full = meng_breakdown(xd, k, MengMode::full, params);
                r.meng_main = full.main;
                r.meng_full = full.value;
                r.dropped_scale = full.dropped_scale;
                r.ratio = static_cast<double>(r.exact) / full.main;
            }
            out.push_back(r);
        }
    }
    return out;
}

} // namespace propp
