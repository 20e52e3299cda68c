#include "propp/bound_suite.hpp"

#include "propp/constructor.hpp"
#include "propp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace propp {

namespace {

BoundCheck less(std::string name, double value, double bound)
{
    return {std::move(name), "<", value, bound, 0.0, value < bound};
}

BoundCheck greater(std::string name, double value, double bound)
{
    return {std::move(name), ">", value, bound, 0.0, value > bound};
}

BoundCheck at_least(std::string name, double value, double bound)
{
    return {std::move(name), ">=", value, bound, 0.0, value >= bound};
}

BoundCheck at_most(std::string name, double value, double bound)
{
    return {std::move(name), "<=", value, bound, 0.0, value <= bound};
}

BoundCheck within(std::string name, double value, double lo, double hi)
{
    return {std::move(name), "in", value, lo, hi, value > lo && value < hi};
}

template <class Fn>
std::pair<double, double> grid_range(const std::vector<double>& grid, Fn fn)
{
    double lo = INFINITY, hi = -INFINITY;
    for (double x : grid) {
        const double v = fn(x);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

} // namespace

std::vector<double> corollary_grid(int points)
{
    if (points < 2)
        throw DomainError("corollary_grid: need at least 2 points");
    std::vector<double> grid;
    for (int t = 0; t < points; ++t)
        grid.push_back((99.0 + 2.0 * t / (points - 1)) / 300.0);
    return grid;
}

std::vector<BoundCheck> run_bound_suite(const BoundSuiteConfig& config)
{
    std::vector<BoundCheck> out;
    const auto grid = corollary_grid(config.grid_points);
    const std::uint64_t L = config.constants_limit;

    const auto m = mertens_M34(L);
    out.push_back(within("M(3,4) within 0.005 of (0.0482, 0.0483)", m.value, 0.0482 - 0.005, 0.0483 + 0.005));
    if (L / 10 >= 1'000)
        out.push_back(less("M(3,4) drift over one decade", std::fabs(mertens_M34(L / 10).value - m.value), 0.005));

    const auto c = c34(L);
    out.push_back(less("|C(3,4) - 2 M(3,4)|", std::fabs(c.value - 2.0 * m.value), 0.01));
    out.push_back(greater("C(3,4) > 0.0964 - 0.01", c.value, 0.0864));

    const auto sq = lambda_p2_sum(10'000);
    out.push_back(less("sum_{p <= 10^4} lambda(p)/p^2", sq.estimate.value, 0.1485));
    out.push_back(less("sum lambda(p)/p^2 tail-bounded", sq.upper_bound, 0.1486));

    const auto [g0lo, g0hi] = grid_range(grid, [](double x) { return gamma_triple(x).gamma; });
    const auto [g1lo, g1hi] = grid_range(grid, [](double x) { return gamma_triple(x).gamma1; });
    const auto [g2lo, g2hi] = grid_range(grid, [](double x) { return gamma_triple(x).gamma2; });
    out.push_back(at_least("min Gamma(x/2+1)", g0lo, 0.9271));
    out.push_back(at_most("max Gamma(x/2+1)", g0hi, 0.9283));
    out.push_back(at_least("min Gamma'(x/2+1)", g1lo, -0.3104));
    out.push_back(at_most("max Gamma'(x/2+1)", g1hi, -0.3058));
    out.push_back(at_least("min Gamma''(x/2+1)", g2lo, 1.3209));
    out.push_back(at_most("max Gamma''(x/2+1)", g2hi, 1.3302));

    const auto [slo, shi] = grid_range(grid, [&](double x) { return prime_log_sum(x, L); });
    out.push_back(greater("min prime_log_sum", slo, -0.2905));
    out.push_back(less("max prime_log_sum", shi, -0.2403));

    const auto [plo, phi] = grid_range(grid, [&](double x) { return euler_product(x, config.h_limit); });
    (void)plo;
    out.push_back(less("max euler product", phi, 0.9238));

    const auto [flo, fhi] = grid_range(grid, [&](double x) { return f_factor(x, config.h_limit); });
    (void)fhi;
    out.push_back(at_least("min f(x)", flo, -0.5315));

    const auto [hlo, hhi] = grid_range(grid, [&](double x) {
        return h_second(x, config.h_limit, DerivativeMethod::analytic);
    });
    (void)hhi;
    out.push_back(greater("min h''(x)", hlo, -0.492));
    out.push_back(greater("h''(1/3)", h_second(1.0 / 3.0, config.h_limit, DerivativeMethod::analytic), -0.492));

    const double analytic = h_second(1.0 / 3.0, config.h_limit, DerivativeMethod::analytic);
    const double numeric = h_second(1.0 / 3.0, config.h_limit, DerivativeMethod::numeric);
    out.push_back(less("|h'' analytic - numeric| at 1/3", std::fabs(analytic - numeric), 1e-3));

    const double corollary =
        1.0 + c.value / 2.0 + h_second(1.0 / 3.0, config.h_limit, DerivativeMethod::analytic) / 2.0;
    out.push_back(at_least("corollary constant at 1/3", corollary, 0.802));

    // The worst-case combinations of the published brackets.
    const double f_worst = 0.2403 * 0.2403 / 0.9283 - 1.3302 / (4 * 0.9271 * 0.9271) - 0.1486 / 0.9271 -
                           0.3104 * 0.2905 / (0.9271 * 0.9271) + 0.3058 * 0.3058 / (2 * std::pow(0.9283, 3));
    out.push_back(greater("f lower bound from brackets", f_worst, -0.5315));
    out.push_back(less("exp(-(99/300) 0.2403)", std::exp(-(99.0 / 300.0) * 0.2403), 0.9238));
    out.push_back(at_least("1 + 0.0964/2 - 0.492/2", 1.0 + 0.0964 / 2.0 - 0.492 / 2.0, 0.802));

    double bracket_min = INFINITY;
    for (double t = 4.0; t <= 300.0; t += 0.25) {
        const auto x = LogScale::from_half_loglog_sqrt(t);
        const auto w = contribution_window(x);
        for (long long j = 2; j <= w.l; ++j)
            bracket_min = std::min(bracket_min, theorem_terms(x, j).bracket);
    }
    out.push_back(at_least("min (1 + 2(j-1)/L)^(1-j)", bracket_min, 1.0 / std::numbers::e));
    return out;
}

} // namespace propp
