#pragma once

#include "propp/analytic_constants.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace propp {

// One executable inequality: value compared against bound.
struct BoundCheck {
    std::string name;
    std::string relation; // "<", "<=", ">", ">=", "in"
    double value = 0.0;
    double bound = 0.0;
    double bound_hi = 0.0; // upper end when relation is "in"
    bool pass = false;
};

struct BoundSuiteConfig {
    std::uint64_t constants_limit = kConstantsPrimeLimit;
    std::uint64_t h_limit = kHPrimeLimit;
    // Points of the evaluation grid over [99/300, 101/300].
    int grid_points = 11;
};

// The 11-point (by default) grid over [99/300, 101/300], endpoints included.
std::vector<double> corollary_grid(int points = 11);

// Every inequality used in the lower-bound argument for pi_k(x; 4, 3), in
// order: constants band, C = 2M relation, square-reciprocal chain, Gamma
// brackets, prime-sum bracket, product bound, f bound, h'' bound, the
// corollary constant, and the 1/e bracket of the counting argument.
std::vector<BoundCheck> run_bound_suite(const BoundSuiteConfig& config = {});

} // namespace propp
