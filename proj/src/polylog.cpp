#include "polylog/polylog.hpp"

#include <algorithm>
#include <cmath>

namespace polylog {

cplx series_eval(const Bounds& bounds, const Vec& x, const SeriesOptions& opts) {
    const int n = bounds.depth();
    if (x.size() != n) throw error("series_eval: point dimension does not match bounds");
    double r = 0.0;
    for (int t = 0; t < n; ++t) r = std::max(r, std::abs(x[t]));
    if (r == 0.0) return 0.0;
    for (int t = 0; t < n; ++t)
        if (x[t] == 0.0) return 0.0;  // every term carries x_t^{k_t}, k_t >= 1
    if (r > opts.max_radius)
        throw error("series_eval: point outside the convergence polydisk (|x| <= " +
                    std::to_string(opts.max_radius) + ")");

    // cum[t] = sum over chains ending at slot t with k_t <= k
    std::vector<cplx> cum(n + 1, 0.0);
    cum[0] = 1.0;
    std::vector<cplx> pw(n, 1.0);
    const double lgn = std::lgamma(n);  // (n-1)!

    for (long k = 1; k <= opts.max_terms; ++k) {
        for (int t = n; t >= 1; --t) {
            // cum[t-1] still holds its value at k-1 here
            pw[t - 1] *= x[t - 1];
            cum[t] += pw[t - 1] / std::pow(static_cast<double>(k), bounds.m[t - 1]) * cum[t - 1];
        }
        // geometric majorant of the k_n > k tail
        double ratio = r * std::pow((k + 1.0) / k, n - 1);
        if (ratio < 1.0) {
            double logb = (k + 1) * std::log(r) + (n - 1) * std::log(k + 1.0) - lgn -
                          std::log1p(-ratio);
            if (logb < std::log(opts.tol)) return cum[n];
        }
    }
    throw convergence_error("series_eval: term budget exhausted");
}

cplx hyperlog_eval(const std::vector<cplx>& a, cplx z, const EvalConfig& cfg) {
    if (a.empty()) return 1.0;
    if (z == 0.0) return 0.0;
    if (std::abs(a.front()) == 0.0)
        throw error("hyperlog_eval: leading pole at the base point diverges");

    // one coordinate per pole; u_i(t) = t / a_i turns dt/(t-a_i) into
    // dlog(1 - u_i) and dt/t into dlog(u_j) for any pole coordinate j
    std::vector<int> coord_of(a.size(), -1);
    int dims = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0.0) coord_of[i] = dims++;

    TensorWord word;
    std::vector<DivisorComponent> relevant;
    int last_pole = -1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0.0) {
            last_pole = coord_of[i];
            word.letters.push_back(dlog_one_minus(last_pole, last_pole));
            relevant.push_back(DivisorComponent::product_one(last_pole, last_pole));
        } else {
            if (last_pole < 0) throw error("hyperlog_eval: leading letters must carry a pole");
            word.letters.push_back(dlog_coord(last_pole, last_pole));
        }
    }

    Vec from = Vec::Zero(dims), to(dims);
    for (size_t i = 0; i < a.size(); ++i)
        if (coord_of[i] >= 0) to[coord_of[i]] = z / a[i];
    PathSpec path = line_path(from, to, /*start_exempt=*/true);
    return iterated_integral(word, path, cfg, nullptr, &relevant);
}

cplx hyperlog_via_identity(const Bounds& bounds, const Vec& x, const EvalConfig& cfg) {
    const int n = bounds.depth();
    if (x.size() != n) throw error("hyperlog_via_identity: dimension mismatch");
    for (int t = 0; t < n; ++t)
        if (x[t] == 0.0) return 0.0;
    std::vector<cplx> a;
    cplx suffix = 1.0;
    std::vector<cplx> suffixes(n);
    for (int t = n - 1; t >= 0; --t) {
        suffix *= x[t];
        suffixes[t] = suffix;
    }
    for (int t = 0; t < n; ++t) {
        a.push_back(1.0 / suffixes[t]);
        for (int k = 1; k < bounds.m[t]; ++k) a.push_back(0.0);
    }
    double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign * hyperlog_eval(a, 1.0, cfg);
}

cplx continue_eval(const Bounds& bounds, const PathSpec& path, const EvalConfig& cfg,
                   EvalStats* stats) {
    if (path.dim() != bounds.depth())
        throw path_error("continue_eval: path dimension does not match bounds");
    if (!path.start_exempt || path.start().norm() > 1e-12)
        throw path_error("continue_eval: path must start at the origin (start_exempt)");
    return iterated_integral(build_integrand(bounds), path, cfg, stats);
}

cplx multilog_eval(int n, const PathSpec& path, const EvalConfig& cfg, EvalStats* stats) {
    if (path.dim() != n) throw path_error("multilog_eval: path dimension mismatch");
    if (!path.start_exempt || path.start().norm() > 1e-12)
        throw path_error("multilog_eval: path must start at the origin (start_exempt)");
    return iterated_integral(build_multilog_integrand(n), path, cfg, stats);
}

cplx eval_at(const Bounds& bounds, const Vec& x, const EvalConfig& cfg) {
    double r = 0.0;
    for (int t = 0; t < x.size(); ++t) r = std::max(r, std::abs(x[t]));
    if (r <= 0.85) {
        SeriesOptions so;
        so.tol = std::min(1e-12, cfg.abs_tol);
        return series_eval(bounds, x, so);
    }
    PathSpec p = line_path(Vec::Zero(x.size()), x, /*start_exempt=*/true);
    return continue_eval(bounds, p, cfg);
}

namespace {

cplx reduced_series(const std::vector<int>& m, const Vec& args, const SeriesOptions& opts) {
    if (m.empty()) return 1.0;
    return series_eval(Bounds(m), args, opts);
}

}  // namespace

std::vector<double> differential_residuals(const Bounds& bounds, const Vec& x, double h,
                                           const SeriesOptions& opts) {
    const int n = bounds.depth();
    if (x.size() != n) throw error("differential_residuals: dimension mismatch");
    std::vector<double> res(n);

    for (int t = 0; t < n; ++t) {
        Vec xp = x, xm = x;
        xp[t] += h;
        xm[t] -= h;
        cplx fd = (series_eval(bounds, xp, opts) - series_eval(bounds, xm, opts)) / (2 * h);

        cplx rhs;
        if (bounds.m[t] > 1) {
            auto m = bounds.m;
            --m[t];
            rhs = series_eval(Bounds(m), x, opts) / x[t];
        } else {
            std::vector<int> m;
            for (int s = 0; s < n; ++s)
                if (s != t) m.push_back(bounds.m[s]);

            // x(v_t): x_{t-1} absorbs x_t
            Vec args1(n - 1);
            {
                int w = 0;
                for (int s = 0; s < n; ++s) {
                    if (s == t) continue;
                    args1[w] = (s == t - 1) ? x[s] * x[t] : x[s];
                    ++w;
                }
            }
            rhs = reduced_series(m, args1, opts) / (1.0 - x[t]);

            if (t < n - 1) {
                // x(v_{t+1}): x_t absorbs x_{t+1}
                Vec args2(n - 1);
                int w = 0;
                for (int s = 0; s < n; ++s) {
                    if (s == t + 1) continue;
                    args2[w] = (s == t) ? x[t] * x[t + 1] : x[s];
                    ++w;
                }
                rhs += reduced_series(m, args2, opts) / (x[t] * (x[t] - 1.0));
            }
        }
        res[t] = std::abs(fd - rhs);
    }
    return res;
}

}  // namespace polylog
