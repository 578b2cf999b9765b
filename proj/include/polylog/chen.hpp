#pragma once

#include <vector>

#include "polylog/integrand.hpp"
#include "polylog/paths.hpp"

namespace polylog {

struct EvalConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-11;  // step-doubling floor; roundoff accumulates near this on long paths
    /// RK4 substeps per unit of segment measure at the coarsest refinement.
    int initial_steps_per_segment = 48;
    int min_steps_per_segment = 4;
    int max_refinements = 12;
    /// Optional basepoint regularization: when positive the first segment is
    /// integrated from this parameter offset instead of the exact start.
    /// The default exact-start handling reparameterizes the first segment by
    /// t = u^start_power, which kills the integrable dlog singularity at a
    /// coordinate-hyperplane basepoint without any offset error.
    double start_offset = 0.0;
    int start_power = 8;
    /// Parameter tail dropped on the last segment when the path terminates
    /// on a coordinate hyperplane (value error is O(trim * log trim)).
    double end_trim = 1e-9;
    double delta_min = 1e-3;
    double singular_tol = 1e-9;
    bool validate_paths = true;
    int validation_samples = 64;
};

struct EvalStats {
    int refinements = 0;
    long long rhs_evals = 0;
    long long steps = 0;
    double est_error = 0.0;
};

/// Iterated path integral of a word sum: per word the triangular system
/// I_0 = 1, dI_k = I_{k-1} f_k dt is stepped along the concatenated
/// segments with classical RK4, refined by global step doubling until two
/// consecutive refinements agree within tolerance. Returns the coefficient
/// weighted sum over words. A word with no letters contributes its
/// coefficient.
cplx iterated_integral(const Integrand& I, const PathSpec& path, const EvalConfig& cfg = {},
                       EvalStats* stats = nullptr,
                       const std::vector<DivisorComponent>* validate_subset = nullptr);

cplx iterated_integral(const TensorWord& word, const PathSpec& path, const EvalConfig& cfg = {},
                       EvalStats* stats = nullptr,
                       const std::vector<DivisorComponent>* validate_subset = nullptr);

/// All (r+s choose r) interleavings of two words, each preserving its own
/// letter order.
std::vector<std::vector<OneForm>> shuffle(const std::vector<OneForm>& a,
                                          const std::vector<OneForm>& b);

/// | int_{pq} W - sum_j int_p (prefix) int_q (suffix) |.
double composition_residual(const Integrand& I, const PathSpec& p, const PathSpec& q,
                            const EvalConfig& cfg = {});

/// | int_{p^{-1}} W - sum_w c_w (-1)^{K} int_p (reversed word) |.
double inversion_residual(const Integrand& I, const PathSpec& p, const EvalConfig& cfg = {});

/// | int_p A * int_p B - sum over shuffles of int_p w |.
double shuffle_residual(const std::vector<OneForm>& a, const std::vector<OneForm>& b,
                        const PathSpec& p, const EvalConfig& cfg = {});

/// Each segment split into `parts` equal parameter pieces; same image,
/// different parameterization.
PathSpec subdivided(const PathSpec& p, int parts);

}  // namespace polylog
