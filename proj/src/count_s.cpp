#include "propp/count_s.hpp"

#include "propp/analytic_constants.hpp"
#include "propp/errors.hpp"
#include "propp/parallel.hpp"

#include <cmath>

namespace propp {

CountSReport count_s(u128 limit, const ConstructOptions& options)
{
    if (limit == 0)
        throw DomainError("count_s: limit must be at least 1");
    CountSReport r;
    r.limit = limit;
    const std::size_t top = max_set_index(limit, options);
    const auto counts =
        parallel_map<std::uint64_t>(top, [&](std::size_t t) { return count_S_i(t + 1, limit, options); });
    for (std::size_t t = 0; t < top; ++t) {
        r.per_index.emplace_back(t + 1, counts[t]);
        r.total += counts[t];
    }
    const double x = to_double(limit);
    if (x > 1.0 && std::log(std::log(x)) > 1.0 + 1e-12)
        r.envelope = envelope(x);
    r.baseline_count = baseline_squares(limit).size();
    if (limit > 1) {
        const double root = std::sqrt(x);
        r.baseline_asymptotic = limit >= 4 ? root / std::log(root) : 0.0;
    }
    return r;
}

} // namespace propp
