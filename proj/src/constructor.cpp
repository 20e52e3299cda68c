#include "propp/constructor.hpp"

#include "propp/errors.hpp"
#include "propp/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace propp {

namespace {

// The i smallest primes = 3 mod 4 that may divide nu.
std::vector<std::uint64_t> smallest_admissible(std::size_t i, const ConstructOptions& options)
{
    std::vector<std::uint64_t> out;
    out.reserve(i);
    for (std::size_t idx = 1; out.size() < i; ++idx) {
        if (options.exclude_qi && idx == i)
            continue;
        out.push_back(nth_q(idx));
    }
    return out;
}

struct Plan {
    u128 q4 = 0;
    u128 nu_max = 0;
    std::uint64_t qi = 0;
    std::shared_ptr<const PrimeTable> table;
    std::size_t admissible_end = 0; // class3()[0, end) covers every usable prime
};

// Returns false when S_i has no element <= limit.
bool plan_S_i(std::size_t i, u128 limit, const ConstructOptions& options, Plan& plan)
{
    if (i == 0)
        throw DomainError("set index must be at least 1");
    if (limit == 0)
        throw DomainError("limit must be at least 1");

    plan.qi = nth_q(i);
    if (!mul_fits(1, plan.qi, plan.q4) || !mul_fits(plan.q4, plan.qi, plan.q4) ||
        !mul_fits(plan.q4, plan.qi, plan.q4) || !mul_fits(plan.q4, plan.qi, plan.q4) || plan.q4 > limit)
        return false;
    plan.nu_max = isqrt(limit / plan.q4);

    // The largest prime factor of nu is at most nu_max over the product of
    // the i - 1 smallest admissible primes.
    const auto smallest = smallest_admissible(i, options);
    u128 head = 1;
    for (std::size_t t = 0; t + 1 < smallest.size(); ++t)
        if (!mul_fits(head, smallest[t], head) || head > plan.nu_max)
            return false;
    const u128 p_max = plan.nu_max / head;
    if (p_max < smallest.back())
        return false;
    if (p_max > options.sieve_budget)
        throw ResourceError("S_" + std::to_string(i) + " up to " + to_string(limit) + " needs primes up to " +
                            to_string(p_max) + ", beyond the sieve budget " +
                            std::to_string(options.sieve_budget));

    plan.table = shared_table(static_cast<std::uint64_t>(std::max<u128>(p_max, plan.qi)));
    plan.admissible_end = plan.table->class3_count_upto(static_cast<std::uint64_t>(p_max));
    return true;
}

// Visits every admissible nu <= nu_max with exactly i factors; factors are
// pushed in ascending order.
template <class Visit>
void walk_nu(const Plan& plan, std::size_t i, const ConstructOptions& options, Visit&& visit)
{
    const auto primes = plan.table->class3().first(plan.admissible_end);
    std::vector<std::uint64_t> stack;
    stack.reserve(i);

    auto rec = [&](auto&& self, std::size_t from, std::size_t remaining, u128 prod) -> void {
        for (std::size_t idx = from; idx < primes.size(); ++idx) {
            const std::uint64_t p = primes[idx];
            if (options.exclude_qi && p == plan.qi)
                continue;
            // Every later factor exceeds p, so prod * p^remaining bounds nu.
            u128 bound = prod;
            bool fits = true;
            for (std::size_t e = 0; e < remaining && fits; ++e)
                fits = mul_fits(bound, p, bound) && bound <= plan.nu_max;
            if (!fits)
                break;
            stack.push_back(p);
            if (remaining == 1)
                visit(prod * p, stack);
            else
                self(self, idx + 1, remaining - 1, prod * p);
            stack.pop_back();
        }
    };
    rec(rec, 0, i, 1);
}

} // namespace

std::vector<SetElement> enumerate_S_i(std::size_t i, u128 limit, const ConstructOptions& options)
{
    Plan plan;
    if (!plan_S_i(i, limit, options, plan))
        return {};

    std::vector<SetElement> out;
    walk_nu(plan, i, options, [&](u128 nu, const std::vector<std::uint64_t>& factors) {
        if (out.size() >= options.max_elements)
            throw ResourceError("S_" + std::to_string(i) + " up to " + to_string(limit) + " has more than " +
                                std::to_string(options.max_elements) + " elements");
        out.push_back({checked_mul(plan.q4, checked_mul(nu, nu)), i, factors});
    });
    std::sort(out.begin(), out.end(), [](const SetElement& a, const SetElement& b) { return a.value < b.value; });
    return out;
}

std::uint64_t count_S_i(std::size_t i, u128 limit, const ConstructOptions& options)
{
    Plan plan;
    if (!plan_S_i(i, limit, options, plan))
        return 0;
    std::uint64_t count = 0;
    walk_nu(plan, i, options, [&](u128, const std::vector<std::uint64_t>&) { ++count; });
    return count;
}

std::vector<SetElement> enumerate_S(u128 limit, const ConstructOptions& options)
{
    if (limit == 0)
        throw DomainError("limit must be at least 1");
    const std::size_t top = max_set_index(limit, options);
    auto parts = parallel_map<std::vector<SetElement>>(
        top, [&](std::size_t t) { return enumerate_S_i(t + 1, limit, options); });

    std::vector<SetElement> out;
    for (auto& part : parts) {
        if (out.size() + part.size() > options.max_elements)
            throw ResourceError("S up to " + to_string(limit) + " has more than " +
                                std::to_string(options.max_elements) + " elements");
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::sort(out.begin(), out.end(), [](const SetElement& a, const SetElement& b) { return a.value < b.value; });
    for (std::size_t t = 1; t < out.size(); ++t)
        if (out[t - 1].value == out[t].value)
            throw std::logic_error("S_" + std::to_string(out[t - 1].set_index) + " and S_" +
                                   std::to_string(out[t].set_index) + " share the element " +
                                   to_string(out[t].value));
    return out;
}

u128 min_of_S_i(std::size_t i, const ConstructOptions& options)
{
    if (i == 0)
        throw DomainError("set index must be at least 1");
    u128 nu = 1;
    for (auto p : smallest_admissible(i, options))
        nu = checked_mul(nu, p);
    return checked_mul(checked_pow(nth_q(i), 4), checked_mul(nu, nu));
}

std::size_t max_set_index(u128 limit, const ConstructOptions& options)
{
    std::size_t i = 0;
    for (;;) {
        u128 next;
        try {
            next = min_of_S_i(i + 1, options);
        } catch (const OverflowError&) {
            return i;
        }
        if (next > limit)
            return i;
        ++i;
    }
}

std::vector<u128> baseline_squares(u128 limit)
{
    const u128 root = isqrt(limit);
    std::vector<u128> out;
    if (root < 3)
        return out;
    if (root > kDefaultSieveBudget)
        throw ResourceError("baseline up to " + to_string(limit) + " needs primes beyond the sieve budget");
    const auto table = shared_table(static_cast<std::uint64_t>(root));
    for (auto q : table->class3()) {
        if (q > root)
            break;
        out.push_back(static_cast<u128>(q) * q);
    }
    return out;
}

std::vector<u128> finite_block(std::uint64_t x)
{
    if (x == 0)
        throw DomainError("finite_block: x must be at least 1");
    std::vector<u128> out;
    for (std::uint64_t v = x - x / 3; v <= x; ++v)
        out.push_back(v);
    return out;
}

IndexWindow contribution_window(LogScale x)
{
    if (!(x.ln_x > 2.0))
        throw DomainError("contribution_window: ln ln sqrt(x) is undefined or negative");
    const double t = x.loglog_sqrt() / 2.0;
    IndexWindow w;
    w.k = stable_floor(t);
    w.l = t >= 0 ? stable_floor(std::sqrt(t)) : 0;
    if (w.k < 2)
        throw DomainError("contribution_window: k = floor(ln ln sqrt(x) / 2) must be at least 2");
    if (w.l < 2)
        throw DomainError("contribution_window: l = floor(sqrt(ln ln sqrt(x) / 2)) must be at least 2 "
                          "(needs ln ln sqrt(x) >= 8)");
    w.lo = w.k + 2;
    w.hi = w.k + w.l;
    return w;
}

} // namespace propp
