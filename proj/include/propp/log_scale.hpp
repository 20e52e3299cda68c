#pragma once

#include <cmath>

namespace propp {

// A positive real carried by its natural logarithm, so that arguments such
// as x = exp(2 e^18) can be handled. Iterated logs are computed from ln_x.
struct LogScale {
    double ln_x = 0.0;

    static LogScale of(double x) { return {std::log(x)}; }
    static LogScale from_ln(double ln_x) { return {ln_x}; }

    // The x for which ln(ln(sqrt x)) / 2 == t.
    static LogScale from_half_loglog_sqrt(double t) { return {2.0 * std::exp(2.0 * t)}; }

    // exp(ln_x); +inf when not representable.
    double value() const { return std::exp(ln_x); }
    double ln2() const { return std::log(ln_x); }
    double ln3() const { return std::log(ln2()); }

    // ln(ln(sqrt x)), the quantity the sets S_{k+j} are indexed against.
    double loglog_sqrt() const { return std::log(ln_x / 2.0); }
};

// floor(v), snapping values within a few ulps of an integer to it. Iterated
// logs of exactly constructed grid points otherwise land just below.
inline long long stable_floor(double v)
{
    const double r = std::round(v);
    if (std::fabs(v - r) <= 1e-12 * std::fmax(1.0, std::fabs(v)))
        return static_cast<long long>(r);
    return static_cast<long long>(std::floor(v));
}

} // namespace propp
