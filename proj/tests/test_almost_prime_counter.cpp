#include "oracles.hpp"

#include "propp/almost_prime_counter.hpp"
#include "propp/analytic_constants.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace propp;

namespace {

const oracle::PiKTable& scan_table()
{
    static const auto table = oracle::pi_k_scan(1'000'000);
    return table;
}

// Second counting route: every last factor located by binary search in an
// explicit list of class-3 primes up to x / 3.
std::uint64_t pi_k_by_list(std::uint64_t x, unsigned k)
{
    const auto q = oracle::class3_td(k == 1 ? x : x / 3 + 3);
    auto upto = [&](std::uint64_t v) {
        return static_cast<std::uint64_t>(std::upper_bound(q.begin(), q.end(), v) - q.begin());
    };
    if (k == 1)
        return upto(x);
    auto rec = [&](auto&& self, std::size_t from, unsigned left, std::uint64_t m) -> std::uint64_t {
        std::uint64_t total = 0;
        for (std::size_t i = from; i < q.size(); ++i) {
            const std::uint64_t mm = m * q[i];
            if (mm > x / q[i])
                break;
            if (left == 1) {
                const std::uint64_t c = upto(x / mm);
                total += c > i + 1 ? c - (i + 1) : 0;
            } else {
                total += self(self, i + 1, left - 1, mm);
            }
        }
        return total;
    };
    return rec(rec, 0, k - 1, 1);
}

} // namespace

TEST_CASE("pi_k_exact examples")
{
    CHECK(pi_k_exact(10, 1) == 2);
    CHECK(pi_k_exact(100, 2) == 6);
    CHECK(pi_k_exact(300, 3) == 1);
    CHECK(pi_k_exact(2, 1) == 0);
    CHECK(pi_k_exact(1, 1) == 0);
    CHECK(pi_k_exact(230, 3) == 0);
    CHECK(pi_k_exact(231, 3) == 1);
    CHECK_THROWS_AS(pi_k_exact(0, 1), DomainError);
    CHECK_THROWS_AS(pi_k_exact(10, 0), DomainError);
    CHECK_THROWS_AS(pi_k_exact(kMaxExactX + 1, 2), ResourceError);
}

TEST_CASE("pi_k_exact matches the trial-division scan for x <= 1e6")
{
    const auto& t = scan_table();
    std::vector<std::uint64_t> xs;
    for (std::uint64_t x = 1; x <= 3'000; ++x)
        xs.push_back(x);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 150; ++i)
        xs.push_back(rng() % 1'000'000 + 1);
    for (std::uint64_t p = 10; p <= 1'000'000; p *= 10)
        xs.push_back(p);
    for (auto x : xs) {
        std::uint64_t sum = 0;
        for (unsigned k = 1; k <= 8; ++k) {
            const auto got = pi_k_exact(x, k);
            REQUIRE(got == t.at(k, x));
            sum += got;
        }
        // Partition identity over k.
        CHECK(sum == t.at(0, x));
    }
}

TEST_CASE("pi_k_exact: monotone in x, second counting route at 1e7")
{
    for (unsigned k = 1; k <= 4; ++k) {
        std::uint64_t prev = 0;
        for (std::uint64_t x = 1; x <= 5'000'000; x = x * 3 + 1) {
            const auto v = pi_k_exact(x, k);
            CHECK(v >= prev);
            prev = v;
        }
        CHECK(pi_k_exact(10'000'000, k) == pi_k_by_list(10'000'000, k));
    }
}

TEST_CASE("pi_k_exact is independent of worker count")
{
    set_thread_count(8);
    const auto eight = pi_k_exact(300'000'000, 3);
    set_thread_count(1);
    CHECK(pi_k_exact(300'000'000, 3) == eight);
}

TEST_CASE("landau_term")
{
    const double l1e6 = std::log(1e6);
    CHECK(landau_term(1e6, 2) == doctest::Approx(1e6 * std::log(l1e6) / l1e6).epsilon(1e-12));
    CHECK(landau_term(1e6, 2) == doctest::Approx(1.90e5).epsilon(0.005));
    CHECK(landau_term(1e6, 1) == doctest::Approx(72382.4).epsilon(1e-5));
    const double x = std::exp(std::exp(2.0));
    CHECK(landau_term(x, 2) == doctest::Approx(x * 2.0 / std::exp(2.0)).epsilon(1e-12));
    CHECK(landau_term(10, 1) == doctest::Approx(10 / std::log(10.0)).epsilon(1e-12));
    CHECK_THROWS_AS(landau_term(15.0, 2), DomainError);
    CHECK_THROWS_AS(landau_term(1.0, 1), DomainError);
    CHECK_THROWS_AS(landau_term(100.0, 0), DomainError);
}

TEST_CASE("meng_estimate")
{
    MengParams params;
    params.c34 = 0.0964;
    const double main = meng_estimate(1e9, 2, MengMode::main, params);
    CHECK(main == doctest::Approx(0.25 * (1e9 / std::log(1e9)) * std::log(std::log(1e9))).epsilon(1e-12));
    CHECK(main == doctest::Approx(3.66e7).epsilon(0.002));

    for (double x : {1e5, 1e9, 1e15}) {
        const double L = std::log(std::log(x));
        const double ratio = meng_estimate(x, 2, MengMode::full, params) / meng_estimate(x, 2, MengMode::main, params);
        CHECK(ratio == doctest::Approx(1.0 + 0.0964 / L).epsilon(1e-14));
    }
    // At k = 3 the h'' term is evaluated at 0, where h''(0) = f(0) = -0.557340216 (mpmath, p <= 1e6).
    // It outweighs the C(3,4) term until ln ln x > 11.6, so full < main at 1e9.
    {
        const double L = std::log(std::log(1e9));
        const double ratio = meng_estimate(1e9, 3, MengMode::full, params) / meng_estimate(1e9, 3, MengMode::main, params);
        CHECK(ratio == doctest::Approx(1.0 + 2.0 * 0.0964 / L + 4.0 * -0.55734021599735168 / (L * L)).epsilon(1e-9));
        CHECK(ratio < 1.0);
        CHECK(meng_correction(LogScale::from_ln(std::exp(11.5)), 3, params) < 1.0);
        CHECK(meng_correction(LogScale::from_ln(std::exp(11.7)), 3, params) > 1.0);
    }

    const auto b = meng_breakdown(1e9, 3, MengMode::full, params);
    CHECK(b.dropped_scale == doctest::Approx(9.0 / std::pow(std::log(std::log(1e9)), 3)).epsilon(1e-12));
    CHECK(b.value == doctest::Approx(b.main * b.correction).epsilon(1e-15));

    CHECK_THROWS_AS(meng_estimate(1e9, 1, MengMode::main), DomainError);
    CHECK_THROWS_AS(meng_estimate(1e9, 7, MengMode::main), DomainError); // 2 ln ln 1e9 = 6.06
    CHECK_NOTHROW(meng_estimate(1e9, 6, MengMode::main));
    CHECK_THROWS_AS(meng_estimate(10.0, 2, MengMode::main), DomainError);
}

TEST_CASE("meng main term equals landau_term / 2^k")
{
    for (double x = 100.0; x < 1e300; x *= 1e15) {
        const double L = std::log(std::log(x));
        for (unsigned k = 2; k <= static_cast<unsigned>(2.0 * L); ++k) {
            const double lhs = meng_estimate(x, k, MengMode::main);
            const double rhs = landau_term(x, k) / std::ldexp(1.0, static_cast<int>(k));
            CHECK(std::fabs(lhs - rhs) / rhs < 1e-12);
        }
    }
}

TEST_CASE("corollary window and lower bound")
{
    const auto w = corollary_window(LogScale::from_ln(std::exp(8.0)));
    CHECK(w.lo == 3);
    CHECK(w.hi == 6);

    const double x = 1e100;
    const auto wx = corollary_window(LogScale::of(x));
    for (long long k = wx.lo; k <= wx.hi; ++k) {
        const auto kk = static_cast<unsigned>(k);
        CHECK(corollary_lower_bound(x, kk) / meng_estimate(x, kk, MengMode::main) ==
              doctest::Approx(0.802).epsilon(1e-15));
    }
    CHECK_THROWS_AS(corollary_lower_bound(x, static_cast<unsigned>(wx.hi + 1)), DomainError);
    CHECK_THROWS_AS(corollary_lower_bound(20.0, 2), DomainError);
    CHECK_THROWS_AS(corollary_window(LogScale::of(20.0)), DomainError);
}

TEST_CASE("compare")
{
    const std::vector<std::uint64_t> grid{100};
    const std::vector<unsigned> ks{2};
    MengParams params;
    params.c34 = 0.0964;
    auto r = compare(grid, ks, params);
    REQUIRE(r.size() == 1);
    CHECK(r[0].exact == 6);
    REQUIRE(r[0].meng_main);
    CHECK(*r[0].ratio == doctest::Approx(6.0 / *r[0].meng_main).epsilon(1e-15));
    CHECK(r[0].landau > 0);

    const std::vector<std::uint64_t> ten{10};
    const std::vector<unsigned> one{1};
    r = compare(ten, one, params);
    REQUIRE(r.size() == 1);
    CHECK(r[0].exact == 2);
    CHECK(r[0].landau == doctest::Approx(4.343).epsilon(1e-3));
    CHECK_FALSE(r[0].meng_main);

    CHECK(compare({}, ks, params).empty());
}

TEST_CASE("desk-scale ratio band at 1e7")
{
    MengParams params;
    params.c34 = 0.0964;
    for (unsigned k : {2u, 3u}) {
        const double ratio = static_cast<double>(pi_k_exact(10'000'000, k)) /
                             meng_estimate(1e7, k, MengMode::main, params);
        CHECK(ratio >= 0.3);
        CHECK(ratio <= 3.0);
    }
}
