#include "polylog/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polylog {

Vec random_polydisk_point(std::mt19937_64& rng, int n, double rho) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Vec x(n);
    for (int t = 0; t < n; ++t) {
        double r = rho * (0.25 + 0.75 * unit(rng));
        double th = 2 * std::numbers::pi * unit(rng);
        x[t] = 0.5 + r * std::polar(1.0, th);
    }
    return x;
}

Vec random_safe_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> re(0.15, 0.55), im(-0.2, 0.2);
    Vec x(n);
    for (int t = 0; t < n; ++t) x[t] = cplx(re(rng), im(rng));
    return x;
}

Vec sample_admissible_point(std::mt19937_64& rng, int n,
                            const std::vector<std::pair<int, int>>& windows,
                            const DivisorComponent& comp, double arg_lo, double arg_hi) {
    std::uniform_real_distribution<double> rad(0.3, 0.55), ang(arg_lo, arg_hi);
    for (int attempt = 0; attempt < 20000; ++attempt) {
        Vec x(n);
        for (int t = 0; t < n; ++t) x[t] = rad(rng) * std::polar(1.0, ang(rng));
        bool fine = true;
        try {
            for (auto [a, b] : windows) {
                cplx prod = 1.0;
                for (int i = 0; i < b - a && fine; ++i) {
                    if (i == 0) prod = x[a];
                    cplx den = 1.0 - prod;
                    prod *= x[a + i + 1];
                    fine = std::abs(den) > 0.2 && std::abs((1.0 - prod) / den) <= 0.84;
                }
                if (!fine) break;
            }
            if (!fine) continue;
            if (!validate(line_path(Vec::Zero(n), x, true)).ok()) continue;
            plan_loop(comp, x, +1);
            return x;
        } catch (const error&) {
            continue;
        }
    }
    throw error("sample_admissible_point: no admissible point found");
}

namespace {

OneForm random_letter(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> natoms(1, 2), kind(0, 1), pos(0, n - 1), sgn(0, 1);
    OneForm f;
    while (f.is_zero()) {
        f = OneForm{};
        int m = natoms(rng);
        for (int i = 0; i < m; ++i) {
            int c = sgn(rng) ? 1 : -1;
            if (kind(rng) == 0) {
                f.add(coord_atom(pos(rng)), c);
            } else {
                int a = pos(rng), b = pos(rng);
                if (a > b) std::swap(a, b);
                f.add(one_minus_atom(a, b), c);
            }
        }
    }
    return f;
}

std::vector<OneForm> random_word(std::mt19937_64& rng, int n, int maxlen) {
    std::uniform_int_distribution<int> len(1, maxlen);
    std::vector<OneForm> w;
    int K = len(rng);
    for (int i = 0; i < K; ++i) w.push_back(random_letter(rng, n));
    return w;
}

PathSpec random_path(std::mt19937_64& rng, int n, int segs) {
    std::vector<Vec> pts;
    for (int i = 0; i <= segs; ++i) pts.push_back(random_safe_point(rng, n));
    return polyline_path(pts);
}

SuiteResult finish(SuiteResult r) {
    r.pass = r.max_residual <= r.tolerance;
    return r;
}

}  // namespace

SuiteResult run_shuffle_suite(std::uint64_t seed, int trials, const EvalConfig& cfg) {
    SuiteResult res{"shuffle", false, 0.0, 1e-8, trials, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < trials; ++i) {
        int n = dim(rng);
        auto a = random_word(rng, n, 2);
        auto b = random_word(rng, n, 1);
        PathSpec p = random_path(rng, n, 2);
        res.max_residual = std::max(res.max_residual, shuffle_residual(a, b, p, cfg));
    }
    return finish(res);
}

SuiteResult run_composition_suite(std::uint64_t seed, int trials, const EvalConfig& cfg) {
    SuiteResult res{"composition", false, 0.0, 1e-8, trials, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < trials; ++i) {
        int n = dim(rng);
        Integrand I{Bounds(std::vector<int>(n, 1)), {{1, random_word(rng, n, 3)}}};
        PathSpec p = random_path(rng, n, 2);
        PathSpec q = line_path(p.end(), random_safe_point(rng, n));
        res.max_residual = std::max(res.max_residual, composition_residual(I, p, q, cfg));
    }
    return finish(res);
}

SuiteResult run_inversion_suite(std::uint64_t seed, int trials, const EvalConfig& cfg) {
    SuiteResult res{"inversion", false, 0.0, 1e-8, trials, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3);
    for (int i = 0; i < trials; ++i) {
        int n = dim(rng);
        Integrand I{Bounds(std::vector<int>(n, 1)), {{1, random_word(rng, n, 3)}}};
        PathSpec p = random_path(rng, n, 2);
        res.max_residual = std::max(res.max_residual, inversion_residual(I, p, cfg));
    }
    return finish(res);
}

SuiteResult run_reparam_suite(std::uint64_t seed, int trials, const EvalConfig& cfg) {
    SuiteResult res{"reparam", false, 0.0, 1e-8, trials, ""};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dim(1, 3), parts(2, 5);
    for (int i = 0; i < trials; ++i) {
        int n = dim(rng);
        TensorWord w{1, random_word(rng, n, 3)};
        PathSpec p = random_path(rng, n, 2);
        cplx a = iterated_integral(w, p, cfg);
        cplx b = iterated_integral(w, subdivided(p, parts(rng)), cfg);
        res.max_residual = std::max(res.max_residual, std::abs(a - b));
    }
    return finish(res);
}

SuiteResult run_integrability_suite(const Bounds& bounds, std::uint64_t seed, int points,
                                    double tol) {
    SuiteResult res{"integrability", false, 0.0, tol, points, bounds.str()};
    std::mt19937_64 rng(seed);
    const int n = bounds.depth();
    const int K = bounds.weight();
    Integrand I = canonicalized(build_integrand(bounds));
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int pt = 0; pt < points; ++pt) {
        Vec x = random_safe_point(rng, n);
        Vec u(n), v(n);
        for (int t = 0; t < n; ++t) {
            u[t] = cplx(unit(rng), unit(rng));
            v[t] = cplx(unit(rng), unit(rng));
        }
        for (int i = 0; i + 1 < K; ++i) {
            cplx sum = 0.0;
            for (const auto& w : I.words)
                sum += static_cast<double>(w.coeff) *
                       two_form_eval(w.letters[i], w.letters[i + 1], x, u, v);
            res.max_residual = std::max(res.max_residual, std::abs(sum));
        }
    }
    return finish(res);
}

SuiteResult run_homotopy_suite(const Bounds& bounds, std::uint64_t seed, int pairs,
                               const EvalConfig& cfg) {
    SuiteResult res{"homotopy", false, 0.0, 1e-7, pairs, bounds.str()};
    std::mt19937_64 rng(seed);
    const int n = bounds.depth();
    Integrand I = build_integrand(bounds);
    for (int i = 0; i < pairs; ++i) {
        Vec x = random_polydisk_point(rng, n);
        Vec w1 = random_polydisk_point(rng, n);
        Vec w2 = random_polydisk_point(rng, n);
        PathSpec direct = line_path(Vec::Zero(n), x, true);
        PathSpec detour = polyline_path({Vec::Zero(n), w1, w2, x}, true);
        if (!homotopic_in_s_prime(direct, detour))
            throw error("homotopy suite: detour pair not certified homotopic");
        cplx a = iterated_integral(I, direct, cfg);
        cplx b = iterated_integral(I, detour, cfg);
        res.max_residual = std::max(res.max_residual, std::abs(a - b));
    }
    return finish(res);
}

SuiteResult run_differential_suite(const Bounds& bounds, std::uint64_t seed, int points,
                                   double h) {
    SuiteResult res{"differential", false, 0.0, 1e-6, points, bounds.str()};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < points; ++i) {
        Vec x = random_polydisk_point(rng, bounds.depth(), 0.3);
        for (double r : differential_residuals(bounds, x, h))
            res.max_residual = std::max(res.max_residual, r);
    }
    return finish(res);
}

SuiteResult run_oracle_suite(const Bounds& bounds, std::uint64_t seed, int trials,
                             const EvalConfig& cfg, double tol) {
    SuiteResult res{"oracle", false, 0.0, tol, trials, bounds.str()};
    std::mt19937_64 rng(seed);
    const int n = bounds.depth();
    for (int i = 0; i < trials; ++i) {
        Vec x = random_polydisk_point(rng, n);
        cplx s = series_eval(bounds, x);
        cplx c = continue_eval(bounds, line_path(Vec::Zero(n), x, true), cfg);
        cplx hl = hyperlog_via_identity(bounds, x, cfg);
        res.max_residual = std::max({res.max_residual, std::abs(s - c), std::abs(s - hl)});
    }
    return finish(res);
}

}  // namespace polylog
