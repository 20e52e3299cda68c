#pragma once

namespace propp {

inline constexpr double kEulerGamma = 0.5772156649015329;

// Gamma via the Lanczos approximation (g = 7, 9 terms) with reflection
// below 1/2. Relative accuracy ~1e-15 on (0, 170).
double gamma_fn(double x);

// Digamma and trigamma for x > 0: upward recurrence to x >= 10, then the
// Bernoulli asymptotic series. Throw DomainError for x <= 0.
double digamma(double x);
double trigamma(double x);

} // namespace propp
