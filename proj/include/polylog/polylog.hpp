#pragma once

#include "polylog/chen.hpp"
#include "polylog/integrand.hpp"

namespace polylog {

struct SeriesOptions {
    double tol = 1e-12;
    double max_radius = 0.95;
    long max_terms = 400000;
};

/// Nested power series inside the unit polydisk, summed with a geometric
/// tail bound. Exact 0 when any coordinate vanishes.
cplx series_eval(const Bounds& bounds, const Vec& x, const SeriesOptions& opts = {});

/// Iterated integral of dt/(t - a_i) letters along the straight segment
/// [0, z]; all lower limits at 0. a.front() must be nonzero.
cplx hyperlog_eval(const std::vector<cplx>& a, cplx z, const EvalConfig& cfg = {});

/// The hyperlogarithm route to the same function: (-1)^n F_K with poles
/// 1/(x_i...x_n) and m_i - 1 zeros interleaved, evaluated at z = 1.
cplx hyperlog_via_identity(const Bounds& bounds, const Vec& x, const EvalConfig& cfg = {});

/// Analytic continuation: iterated integral of the word sum for `bounds`
/// along an arbitrary validated path from the origin.
cplx continue_eval(const Bounds& bounds, const PathSpec& path, const EvalConfig& cfg = {},
                   EvalStats* stats = nullptr);

/// All-ones case evaluated through the grouped multiple-logarithm formula.
cplx multilog_eval(int n, const PathSpec& path, const EvalConfig& cfg = {},
                   EvalStats* stats = nullptr);

/// Series where the polydisk allows it, otherwise continuation along the
/// straight path from the origin.
cplx eval_at(const Bounds& bounds, const Vec& x, const EvalConfig& cfg = {});

/// Residuals |finite difference - closed form| of the depth-reduction
/// differential identities, one entry per coordinate, both sides from the
/// series.
std::vector<double> differential_residuals(const Bounds& bounds, const Vec& x, double h = 1e-4,
                                           const SeriesOptions& opts = {});

}  // namespace polylog
