#pragma once

#include <functional>

#include "polylog/polylog.hpp"

namespace polylog {

struct MonodromyResult {
    DivisorComponent component = DivisorComponent::coord_zero(0);
    cplx observed = 0.0;
    cplx predicted = 0.0;
    double abs_err = 0.0;
    std::vector<int> winding;  // certificate over all_components, x-space
    bool certified = false;    // winding is +1 at the target, 0 elsewhere
};

/// Branch change along a loop attached at the endpoint of p:
/// integral over p followed by q, minus the integral over p.
cplx monodromy_delta(const Integrand& I, const PathSpec& p, const PathSpec& q,
                     const EvalConfig& cfg = {});

/// (1 - x_s...x_{s+i+1}) / (1 - x_s...x_{s+i}) for i = 0..n-s-2 (0-based s);
/// the argument vector of the reduced multiple logarithm in the explicit
/// monodromy formula.
Vec y_transform(const Vec& x, int s);

/// -2*pi*i * L_{s}(x_0..x_{s-1}) * L_{n-1-s}(y(s)), with the empty factors
/// equal to 1 (0-based s in [0, n)).
cplx predicted_product_one_tail(int n, int s, const Vec& x, const EvalConfig& cfg = {});

/// Observed-vs-predicted check for the component {x_s...x_{n-1} = 1} on the
/// multiple logarithm of depth n, loop oriented so the defining function
/// winds once positively.
MonodromyResult check_explicit(int n, int s, const Vec& x, const EvalConfig& cfg = {},
                               const LoopOptions& lo = {});

/// Trivial-monodromy check of an arbitrary word sum around a component.
MonodromyResult check_trivial(const Integrand& I, const DivisorComponent& comp, const Vec& x,
                              const EvalConfig& cfg = {}, const LoopOptions& lo = {});

/// F_{ab} (0-based inclusive coordinate window [a, b]): 1 when a == b, else
/// the reduced multiple logarithm of the transformed window arguments.
cplx F_eval(int a, int b, const Vec& x, const EvalConfig& cfg = {});

enum class FFamily { AroundCoordZero, AroundLeadingProduct, AroundTrailingProduct };

/// Monodromy of F_{1n} = L_{n-1}(y(1)) around {x_j = 0}, {x_1...x_j = 1} or
/// {x_j...x_n = 1} (j 0-based), via the image of the loop under the window
/// transform, against the closed-form right-hand side.
MonodromyResult check_F_relation(int n, FFamily family, int j, const Vec& x,
                                 const EvalConfig& cfg = {}, const LoopOptions& lo = {});

/// Image of a path under a pointwise map, as an adaptively sampled
/// polyline. Closed inputs are snapped closed.
PathSpec map_path(const PathSpec& p, const std::function<Vec(const Vec&)>& fn,
                  double max_chord = 0.05, int max_depth = 22);

/// Loop planner: picks a moving coordinate for loop_around, trying the
/// component's coordinates from the last to the first.
PathSpec plan_loop(const DivisorComponent& comp, const Vec& base, int sign,
                   const LoopOptions& lo = {});

}  // namespace polylog
