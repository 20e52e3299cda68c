#include "propp/analytic_constants.hpp"
#include "propp/errors.hpp"
#include "propp/special_functions.hpp"

#include <doctest.h>

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/trigamma.hpp>

#include <cmath>
#include <numbers>

using namespace propp;

namespace {

double rel(double a, double b)
{
    return std::fabs(a - b) / std::fabs(b);
}

} // namespace

TEST_CASE("gamma against std::tgamma and closed forms")
{
    for (double x = 0.05; x < 20.0; x += 0.0137)
        CHECK(rel(gamma_fn(x), std::tgamma(x)) < 1e-13);
    CHECK(gamma_fn(1.0) == 1.0);
    CHECK(gamma_fn(5.0) == 24.0);
    CHECK(rel(gamma_fn(1.5), std::sqrt(std::numbers::pi) / 2.0) < 1e-14);
    CHECK(rel(gamma_fn(0.5), std::sqrt(std::numbers::pi)) < 1e-14);
    CHECK(rel(gamma_fn(2.2), 1.1018024908797127) < 1e-14);  // mpmath
    CHECK(rel(gamma_fn(7.0 / 6.0), 0.9277193336300392) < 1e-14);
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-2.0), DomainError);
}

TEST_CASE("gamma recurrence")
{
    for (double x : {0.1, 0.5, 1.1655, 1.5})
        CHECK(std::fabs(gamma_fn(x + 1.0) - x * gamma_fn(x)) / gamma_fn(x + 1.0) < 1e-10);
}

TEST_CASE("digamma and trigamma against boost and mpmath")
{
    for (double x = 0.05; x < 30.0; x += 0.0173) {
        CHECK(std::fabs(digamma(x) - boost::math::digamma(x)) < 1e-13 * std::fmax(1.0, std::fabs(digamma(x))));
        CHECK(rel(trigamma(x), boost::math::trigamma(x)) < 1e-13);
    }
    CHECK(digamma(1.0) == doctest::Approx(-kEulerGamma).epsilon(1e-15));
    CHECK(trigamma(1.0) == doctest::Approx(std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-15));
    CHECK(rel(digamma(7.0 / 6.0), -0.33212750537491479) < 1e-13);
    CHECK(rel(trigamma(7.0 / 6.0), 1.3185130923496589) < 1e-13);
    CHECK(rel(digamma(0.3), -3.502524222200133) < 1e-13);
    CHECK(rel(trigamma(0.3), 12.24536454610773) < 1e-13);
    CHECK_THROWS_AS(digamma(0.0), DomainError);
    CHECK_THROWS_AS(trigamma(-1.0), DomainError);
}

TEST_CASE("gamma_triple")
{
    const auto g0 = gamma_triple(0.0);
    CHECK(g0.gamma == 1.0);
    CHECK(g0.gamma1 == doctest::Approx(-kEulerGamma).epsilon(1e-14));
    CHECK(g0.gamma2 == doctest::Approx(kEulerGamma * kEulerGamma + std::numbers::pi * std::numbers::pi / 6.0).epsilon(1e-14));
    CHECK(g0.gamma2 == doctest::Approx(1.97811).epsilon(1e-5));
    CHECK(rel(gamma_triple(1.0).gamma, 0.8862269254527580) < 1e-14);
    CHECK_THROWS_AS(gamma_triple(-0.1), DomainError);
    CHECK_THROWS_AS(gamma_triple(4.1), DomainError);
}

TEST_CASE("gamma derivatives against central differences")
{
    const double step = 1e-5;
    for (double x : {0.0, 0.33, 1.0 / 3.0, 0.337, 1.0, 2.5, 4.0}) {
        const double t = x / 2.0 + 1.0;
        const auto g = gamma_triple(x);
        const double d1 = (gamma_fn(t + step) - gamma_fn(t - step)) / (2.0 * step);
        const double d2 = (gamma_fn(t + step) - 2.0 * gamma_fn(t) + gamma_fn(t - step)) / (step * step);
        CHECK(rel(g.gamma1, d1) < 1e-6);
        // Second differences lose ~eps/step^2 = 1e-6 to cancellation.
        CHECK(std::fabs(g.gamma2 - d2) < 1e-6 * std::fabs(g.gamma2) + 4.0 * 2.2e-16 * g.gamma / (step * step));
    }
}

TEST_CASE("Gamma brackets on [99/300, 101/300]")
{
    for (int t = 0; t <= 10; ++t) {
        const double x = (99.0 + 0.2 * t) / 300.0;
        const auto g = gamma_triple(x);
        CHECK(g.gamma >= 0.9271);
        CHECK(g.gamma <= 0.9283);
        CHECK(g.gamma1 >= -0.3104);
        CHECK(g.gamma1 <= -0.3058);
        CHECK(g.gamma2 >= 1.3209);
        CHECK(g.gamma2 <= 1.3302);
    }
}
