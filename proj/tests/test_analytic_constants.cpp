// Frozen reference values come from tests/oracles/constants_oracle.py, which
// recomputes every truncated sum with 30-digit mpmath arithmetic.

#include "propp/analytic_constants.hpp"
#include "propp/bound_suite.hpp"
#include "propp/constructor.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"
#include "propp/special_functions.hpp"

#include <doctest.h>

#include <cmath>
#include <iomanip>
#include <numbers>

using namespace propp;

TEST_CASE("truncated sums match the high-precision oracle")
{
    CHECK(mertens_M34(10'000).value == doctest::Approx(0.048202101518804437).epsilon(1e-11));
    CHECK(mertens_M34(100'000).value == doctest::Approx(0.048222720599689494).epsilon(1e-11));
    CHECK(c34(10'000).value == doctest::Approx(0.095173183040686214).epsilon(1e-11));
    CHECK(c34(100'000).value == doctest::Approx(0.096141233807705685).epsilon(1e-11));
    CHECK(lambda_p2_sum(10'000).estimate.value == doctest::Approx(0.1484287089884511).epsilon(1e-12));
    CHECK(lambda_p2_sum(100'000).estimate.value == doctest::Approx(0.148433254341605).epsilon(1e-12));

    const double third = 1.0 / 3.0;
    CHECK(prime_log_sum(third, 10'000) == doctest::Approx(-0.28637026165533806).epsilon(1e-11));
    CHECK(prime_square_sum(third, 10'000) == doctest::Approx(0.12482725082205365).epsilon(1e-11));
    CHECK(euler_product(third, 10'000) == doctest::Approx(0.91565403720043519).epsilon(1e-11));
    CHECK(f_factor(third, 10'000) == doctest::Approx(-0.47426182883118389).epsilon(1e-10));
    CHECK(h_second(third, 10'000, DerivativeMethod::analytic) == doctest::Approx(-0.43425975825933528).epsilon(1e-10));
    CHECK(h_eval(third, 10'000) == doctest::Approx(0.98699466962449284).epsilon(1e-11));
    CHECK(h_second(third, 100'000, DerivativeMethod::analytic) == doctest::Approx(-0.43444858227483107).epsilon(1e-10));
    CHECK(h_eval(third, 100'000) == doctest::Approx(0.98715367669009426).epsilon(1e-11));
}

TEST_CASE("constant estimates carry their truncation")
{
    const auto m = mertens_M34(1'000);
    CHECK(std::isfinite(m.value));
    CHECK(m.truncation == 1'000);
    CHECK(m.name == "M(3,4)");
    CHECK_FALSE(m.error_note.empty());
    CHECK_THROWS_AS(mertens_M34(999), DomainError);
    CHECK_THROWS_AS(c34(999), DomainError);
    CHECK_THROWS_AS(lambda_p2_sum(9'999), DomainError);
}

TEST_CASE("M(3,4) and C(3,4) at 1e8")
{
    const auto m8 = mertens_M34(100'000'000);
    const auto m7 = mertens_M34(10'000'000);
    CHECK(m8.value > 0.0432);
    CHECK(m8.value < 0.0533);
    CHECK(std::fabs(m7.value - m8.value) < 0.005);

    const auto c8 = c34(100'000'000);
    CHECK(std::fabs(c8.value - 2.0 * m8.value) < 0.01);
    CHECK(c8.value > 0.0864);

    std::vector<ConstantEstimate> decades;
    for (std::uint64_t L = 1'000'000; L <= 100'000'000; L *= 10)
        decades.push_back(c34(L));
    const double s = spread(decades);
    CHECK(s >= 0.0);
    MESSAGE("C(3,4) partial sums over 1e6..1e8 spread by " << s);
}

TEST_CASE("square-reciprocal chain")
{
    const auto s = lambda_p2_sum(10'000);
    CHECK(s.estimate.value < 0.1485);
    CHECK(s.upper_bound < 0.1486);
    CHECK(s.upper_bound == doctest::Approx(s.estimate.value + 1e-4).epsilon(1e-15));
    double prev = 0;
    for (std::uint64_t L : {10'000ULL, 20'000ULL, 100'000ULL, 1'000'000ULL}) {
        const double v = lambda_p2_sum(L).estimate.value;
        CHECK(v >= prev);
        prev = v;
    }
}

TEST_CASE("h family")
{
    CHECK(h_eval(0.0, 10'000) == 1.0);
    CHECK(h_eval(0.0, 1'000'000) == 1.0);
    for (double x : corollary_grid()) {
        CHECK(euler_product(x, 1'000'000) < 0.9238);
        CHECK(h_eval(x, 1'000'000) > 0.0);
        CHECK(h_eval(x, 1'000'000) < 0.9238 / gamma_fn(x / 2.0 + 1.0));
        CHECK(f_factor(x, 1'000'000) >= -0.5315);
        const double a = h_second(x, 1'000'000, DerivativeMethod::analytic);
        const double n = h_second(x, 1'000'000, DerivativeMethod::numeric);
        CHECK(std::fabs(a - n) < 1e-3);
    }
    CHECK(h_second(1.0 / 3.0, 1'000'000, DerivativeMethod::analytic) > -0.492);
    CHECK(std::fabs(h_eval(1.0 / 3.0, 10'000'000) - h_eval(1.0 / 3.0, 100'000'000)) < 1e-3);

    CHECK_THROWS_AS(h_eval(-0.1, 10'000), DomainError);
    CHECK_THROWS_AS(h_eval(0.3, 9'999), DomainError);
    CHECK_THROWS_AS(h_second(2.5, 10'000, DerivativeMethod::analytic), DomainError);
}

TEST_CASE("analytic and numeric h'' agree across [0, 1]")
{
    for (double x = 0.05; x <= 1.0; x += 0.05) {
        const double a = h_second(x, 100'000, DerivativeMethod::analytic);
        const double n = h_second(x, 100'000, DerivativeMethod::numeric);
        CHECK(std::fabs(a - n) < 1e-5);
    }
}

TEST_CASE("prime_log_sum")
{
    for (double x : corollary_grid()) {
        const double v = prime_log_sum(x, 100'000'000);
        CHECK(v > -0.2905);
        CHECK(v < -0.2403);
    }
    const double at0 = prime_log_sum(0.0, 100'000'000);
    CHECK(std::fabs(at0 - (-0.28861 + 0.04825)) < 0.01);
    double prev = prime_log_sum(0.0, 10'000);
    for (double x = 0.1; x <= 1.0; x += 0.1) {
        const double v = prime_log_sum(x, 10'000);
        CHECK(v < prev);
        prev = v;
    }
}

TEST_CASE("corollary constant")
{
    CHECK(corollary_constant(1.0 / 3.0) >= 0.802);
    CHECK(1.0 + 0.0964 / 2.0 - 0.492 / 2.0 == doctest::Approx(0.8022).epsilon(1e-12));
    CHECK_THROWS_AS(corollary_constant(0.3), DomainError);
}

TEST_CASE("envelope")
{
    CHECK(envelope(1e6) == doctest::Approx(41.9).epsilon(0.002));
    CHECK_THROWS_AS(envelope(std::exp(std::numbers::e)), DomainError);
    CHECK_THROWS_AS(envelope(10.0), DomainError);
    CHECK_THROWS_AS(envelope(0.5), DomainError);
    double prev = envelope(1e6);
    for (double x = 2e6; x < 1e300; x *= 7.0) {
        const double v = envelope(x);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(log_envelope(LogScale::of(1e6)) == doctest::Approx(std::log(envelope(1e6))).epsilon(1e-14));
}

TEST_CASE("theorem_terms")
{
    double min_ratio = INFINITY;
    for (double t = 4.0; t <= 300.0; t += 0.5) {
        const auto x = LogScale::from_half_loglog_sqrt(t);
        const auto w = contribution_window(x);
        for (long long j = 2; j <= w.l; ++j) {
            const auto terms = theorem_terms(x, j);
            CHECK(terms.bracket >= 1.0 / std::numbers::e);
            CHECK(terms.bracket <= 1.0);
            min_ratio = std::min(min_ratio, terms.log_f1 - terms.log_f1_reference);
        }
        if (w.l >= 2) {
            const auto at2 = theorem_terms(x, 2);
            const double L = x.loglog_sqrt();
            CHECK(at2.bracket == doctest::Approx(1.0 / (1.0 + 2.0 / L)).epsilon(1e-14));
        }
    }
    // F1 stays above a fixed multiple of sqrt(x) / (ln x (ln ln x)^2 (ln ln ln x)^2).
    CHECK(std::exp(min_ratio) > 0.5);
    MESSAGE("min F1 / reference over the grid: " << std::setprecision(12) << std::exp(min_ratio));

    const auto x = LogScale::from_half_loglog_sqrt(9.0);
    CHECK_THROWS_AS(theorem_terms(x, 1), DomainError);
    CHECK_THROWS_AS(theorem_terms(x, 4), DomainError);
    CHECK_NOTHROW(theorem_terms(x, 3));
}

TEST_CASE("prime sums are bit-identical for any worker count")
{
    set_thread_count(1);
    const double a1 = mertens_M34(20'000'000).value;
    const double b1 = h_second(1.0 / 3.0, 20'000'000, DerivativeMethod::analytic);
    set_thread_count(8);
    const double a8 = mertens_M34(20'000'000).value;
    const double b8 = h_second(1.0 / 3.0, 20'000'000, DerivativeMethod::analytic);
    set_thread_count(1);
    CHECK(a1 == a8);
    CHECK(b1 == b8);
}

TEST_CASE("bound suite passes")
{
    const auto checks = run_bound_suite();
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) {
        INFO(c.name << ": " << c.value << " " << c.relation << " " << c.bound);
        CHECK(c.pass);
    }
}
