#include "propp/special_functions.hpp"

#include "propp/errors.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace propp {

namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

constexpr double kShift = 10.0;

} // namespace

double gamma_fn(double x)
{
    if (x >= 1.0 && x <= 21.0 && x == std::floor(x)) {
        double f = 1.0;
        for (double k = 2.0; k < x; k += 1.0)
            f *= k;
        return f;
    }
    if (x < 0.5) {
        if (x == std::floor(x))
            throw DomainError("gamma: pole at " + std::to_string(x));
        return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
    }
    x -= 1.0;
    double a = kLanczos[0];
    const double t = x + kLanczosG + 0.5;
    for (std::size_t i = 1; i < kLanczos.size(); ++i)
        a += kLanczos[i] / (x + static_cast<double>(i));
    return std::sqrt(2.0 * std::numbers::pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double digamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("digamma: argument must be positive");
    double acc = 0.0;
    while (x < kShift) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    const double r = 1.0 / (x * x);
    // -sum B_{2n} / (2n x^{2n}), n = 1..7
    const double series =
        r * (-1.0 / 12 + r * (1.0 / 120 + r * (-1.0 / 252 + r * (1.0 / 240 + r * (-1.0 / 132 +
        r * (691.0 / 32760 + r * (-1.0 / 12)))))));
    return acc + std::log(x) - 0.5 / x + series;
}

double trigamma(double x)
{
    if (!(x > 0.0))
        throw DomainError("trigamma: argument must be positive");
    double acc = 0.0;
    while (x < kShift) {
        acc += 1.0 / (x * x);
        x += 1.0;
    }
    const double ix = 1.0 / x;
    const double r = ix * ix;
    // 1/x + 1/(2x^2) + sum B_{2n} / x^{2n+1}, n = 1..7
    const double series =
        ix * r * (1.0 / 6 + r * (-1.0 / 30 + r * (1.0 / 42 + r * (-1.0 / 30 + r * (5.0 / 66 +
        r * (-691.0 / 2730 + r * (7.0 / 6)))))));
    return acc + ix + 0.5 * r + series;
}

} // namespace propp
