#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "polylog/monodromy.hpp"

namespace polylog {

struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    int cases = 0;
    std::string detail;
};

/// Random point with every |x_j - 1/2| <= rho (inside the base polydisk).
Vec random_polydisk_point(std::mt19937_64& rng, int n, double rho = 0.35);
/// Random point in a box kept clear of the whole arrangement.
Vec random_safe_point(std::mt19937_64& rng, int n);

/// Rejection-sampled base point for monodromy checks: coordinates in an
/// annulus sector, the transformed arguments of every requested coordinate
/// window inside the series disk, the straight path from the origin valid,
/// and a certified loop around `comp` plannable. Deterministic for a fixed
/// rng. The angular sector restricts to a branch-compatible configuration
/// where composite-loop corrections vanish.
Vec sample_admissible_point(std::mt19937_64& rng, int n,
                            const std::vector<std::pair<int, int>>& windows,
                            const DivisorComponent& comp, double arg_lo = -3.14,
                            double arg_hi = 3.14);

SuiteResult run_shuffle_suite(std::uint64_t seed, int trials, const EvalConfig& cfg = {});
SuiteResult run_composition_suite(std::uint64_t seed, int trials, const EvalConfig& cfg = {});
SuiteResult run_inversion_suite(std::uint64_t seed, int trials, const EvalConfig& cfg = {});
SuiteResult run_reparam_suite(std::uint64_t seed, int trials, const EvalConfig& cfg = {});

/// Adjacent-pair wedge sums of the word expansion vanish at random regular
/// points (the integrability hypothesis behind homotopy invariance).
SuiteResult run_integrability_suite(const Bounds& bounds, std::uint64_t seed, int points,
                                    double tol = 1e-10);

/// Same-endpoint path pairs with a zero-winding difference loop give equal
/// continuations.
SuiteResult run_homotopy_suite(const Bounds& bounds, std::uint64_t seed, int pairs,
                               const EvalConfig& cfg = {});

SuiteResult run_differential_suite(const Bounds& bounds, std::uint64_t seed, int points,
                                   double h = 1e-4);

/// series vs continuation vs hyperlogarithm route, pairwise.
SuiteResult run_oracle_suite(const Bounds& bounds, std::uint64_t seed, int trials,
                             const EvalConfig& cfg = {}, double tol = 1e-6);

}  // namespace polylog
