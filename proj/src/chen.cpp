#include "polylog/chen.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace polylog {

namespace {

struct CompiledWord {
    double coeff;
    std::vector<int> letters;  // indices into the unique-letter table
    int state_offset;          // first prefix state of this word
};

struct Compiled {
    std::vector<OneForm> letters;
    std::vector<CompiledWord> words;
    int state_size = 0;
    double constant = 0.0;  // sum of coefficients of empty words

    explicit Compiled(const Integrand& I) {
        for (const auto& w : I.words) {
            if (w.letters.empty()) {
                constant += w.coeff;
                continue;
            }
            CompiledWord cw;
            cw.coeff = w.coeff;
            cw.state_offset = state_size;
            for (const auto& letter : w.letters) {
                auto it = std::find(letters.begin(), letters.end(), letter);
                if (it == letters.end()) {
                    letters.push_back(letter);
                    it = std::prev(letters.end());
                }
                cw.letters.push_back(static_cast<int>(it - letters.begin()));
            }
            state_size += static_cast<int>(w.letters.size());
            words.push_back(std::move(cw));
        }
    }

    cplx value(const Eigen::VectorXcd& state) const {
        cplx v = constant;
        for (const auto& w : words)
            v += w.coeff * state[w.state_offset + static_cast<int>(w.letters.size()) - 1];
        return v;
    }
};

enum class SegMode { Plain, LogOffset, PowerStart, PowerEnd };

struct SegPlan {
    const PathSegment* seg;
    SegMode mode = SegMode::Plain;
    int power = 1;
    double u0 = 0.0;
    double u1 = 1.0;
    int base_steps = 4;
};

bool touches_hyperplane(const Vec& x) {
    for (int j = 0; j < x.size(); ++j)
        if (std::abs(x[j]) < 1e-12) return true;
    return false;
}

std::vector<SegPlan> plan_segments(const PathSpec& path, const EvalConfig& cfg) {
    std::vector<SegPlan> plans;
    const int nseg = static_cast<int>(path.segments.size());
    for (int i = 0; i < nseg; ++i) {
        SegPlan sp;
        sp.seg = &path.segments[i];
        double len = segment_measure(*sp.seg);
        sp.base_steps = std::max(cfg.min_steps_per_segment,
                                 static_cast<int>(std::ceil(cfg.initial_steps_per_segment *
                                                            std::max(len, 0.05))));
        if (i == 0 && path.start_exempt && touches_hyperplane(segment_start(*sp.seg))) {
            if (cfg.start_offset > 0.0) {
                // geometric grading from the offset toward the far end
                sp.mode = SegMode::LogOffset;
                sp.u0 = cfg.start_offset;
                sp.base_steps *= 2;
            } else {
                sp.mode = SegMode::PowerStart;
                sp.power = cfg.start_power;
                sp.base_steps *= 2;
            }
        }
        if (i == nseg - 1 && path.end_exempt && touches_hyperplane(segment_end(*sp.seg))) {
            if (sp.mode != SegMode::Plain)
                throw path_error("segment cannot be exempt at both ends");
            sp.mode = SegMode::PowerEnd;
            sp.power = cfg.start_power;
            sp.u1 = 1.0 - std::pow(cfg.end_trim, 1.0 / cfg.start_power);
            sp.base_steps *= 2;
        }
        plans.push_back(sp);
    }
    return plans;
}

// parameter map t(u) and its derivative for the three segment modes
inline void param_map(const SegPlan& sp, double u, double& t, double& dt) {
    switch (sp.mode) {
        case SegMode::Plain:
            t = u;
            dt = 1.0;
            return;
        case SegMode::LogOffset: {
            // u in [u0, 1] maps to t in [u0, 1] with geometric clustering at u0
            double w = (u - sp.u0) / (1.0 - sp.u0);
            double lt = std::log(sp.u0);
            t = std::exp((1.0 - w) * lt);
            dt = -lt / (1.0 - sp.u0) * t;
            return;
        }
        case SegMode::PowerStart:
            t = std::pow(u, sp.power);
            dt = sp.power * std::pow(u, sp.power - 1);
            return;
        case SegMode::PowerEnd:
            t = 1.0 - std::pow(1.0 - u, sp.power);
            dt = sp.power * std::pow(1.0 - u, sp.power - 1);
            return;
    }
}

struct Integrator {
    const Compiled& ci;
    const EvalConfig& cfg;
    EvalStats* stats;

    Eigen::VectorXcd letter_vals;

    explicit Integrator(const Compiled& c, const EvalConfig& f, EvalStats* st)
        : ci(c), cfg(f), stats(st), letter_vals(c.letters.size()) {}

    void rhs(const SegPlan& sp, double u, const Eigen::VectorXcd& y, Eigen::VectorXcd& dy) {
        if (stats) ++stats->rhs_evals;
        double t, dt;
        param_map(sp, u, t, dt);
        if (sp.mode == SegMode::PowerStart && u == 0.0) {
            dy.setZero();
            return;
        }
        Vec x = segment_point(*sp.seg, t);
        Vec v = segment_velocity(*sp.seg, t);
        FormEvalOptions fo;
        fo.singular_tol = sp.mode == SegMode::Plain ? cfg.singular_tol : 0.0;
        for (size_t i = 0; i < ci.letters.size(); ++i)
            letter_vals[static_cast<int>(i)] = pullback_eval(ci.letters[i], x, v, fo) * dt;
        for (const auto& w : ci.words) {
            cplx prev = 1.0;
            for (size_t k = 0; k < w.letters.size(); ++k) {
                int idx = w.state_offset + static_cast<int>(k);
                dy[idx] = prev * letter_vals[w.letters[k]];
                prev = y[idx];
            }
        }
    }

    void run(const std::vector<SegPlan>& plans, int density_mult, Eigen::VectorXcd& y) {
        y.setZero();
        Eigen::VectorXcd k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size()), tmp(y.size());
        for (const auto& sp : plans) {
            int steps = sp.base_steps * density_mult;
            double h = (sp.u1 - sp.u0) / steps;
            for (int i = 0; i < steps; ++i) {
                double u = sp.u0 + i * h;
                rhs(sp, u, y, k1);
                tmp = y + 0.5 * h * k1;
                rhs(sp, u + 0.5 * h, tmp, k2);
                tmp = y + 0.5 * h * k2;
                rhs(sp, u + 0.5 * h, tmp, k3);
                tmp = y + h * k3;
                rhs(sp, u + h, tmp, k4);
                y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                if (stats) ++stats->steps;
            }
        }
    }
};

}  // namespace

cplx iterated_integral(const Integrand& I, const PathSpec& path, const EvalConfig& cfg,
                       EvalStats* stats, const std::vector<DivisorComponent>* validate_subset) {
    if (path.segments.empty()) throw path_error("iterated_integral: empty path");
    if (cfg.validate_paths) {
        auto rep = validate(path, cfg.delta_min, cfg.validation_samples, validate_subset);
        if (!rep.ok())
            throw path_error("iterated_integral: path clearance violation at " +
                             rep.violations[0].component.label() + " (|g| = " +
                             std::to_string(rep.violations[0].value) + ")");
    }

    Compiled ci(I);
    if (ci.words.empty()) return ci.constant;

    Integrator integ(ci, cfg, stats);
    auto plans = plan_segments(path, cfg);

    Eigen::VectorXcd y(ci.state_size);
    integ.run(plans, 1, y);
    cplx prev = ci.value(y);

    for (int refine = 1; refine <= cfg.max_refinements; ++refine) {
        integ.run(plans, 1 << refine, y);
        cplx cur = ci.value(y);
        double diff = std::abs(cur - prev);
        if (stats) {
            stats->refinements = refine;
            stats->est_error = diff;
        }
        if (diff <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(cur))) return cur;
        prev = cur;
    }
    throw convergence_error("iterated_integral: no convergence after " +
                            std::to_string(cfg.max_refinements) + " refinements");
}

cplx iterated_integral(const TensorWord& word, const PathSpec& path, const EvalConfig& cfg,
                       EvalStats* stats, const std::vector<DivisorComponent>* validate_subset) {
    Integrand I{Bounds(std::vector<int>{1}), {word}};
    return iterated_integral(I, path, cfg, stats, validate_subset);
}

std::vector<std::vector<OneForm>> shuffle(const std::vector<OneForm>& a,
                                          const std::vector<OneForm>& b) {
    std::vector<std::vector<OneForm>> out;
    std::vector<OneForm> cur;
    cur.reserve(a.size() + b.size());
    auto rec = [&](auto&& self, size_t i, size_t j) -> void {
        if (i == a.size() && j == b.size()) {
            out.push_back(cur);
            return;
        }
        if (i < a.size()) {
            cur.push_back(a[i]);
            self(self, i + 1, j);
            cur.pop_back();
        }
        if (j < b.size()) {
            cur.push_back(b[j]);
            self(self, i, j + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

double composition_residual(const Integrand& I, const PathSpec& p, const PathSpec& q,
                            const EvalConfig& cfg) {
    cplx whole = iterated_integral(I, compose(p, q), cfg);
    cplx sum = 0.0;
    for (const auto& w : I.words) {
        const int K = static_cast<int>(w.letters.size());
        for (int j = 0; j <= K; ++j) {
            TensorWord prefix{1, {w.letters.begin(), w.letters.begin() + j}};
            TensorWord suffix{1, {w.letters.begin() + j, w.letters.end()}};
            sum += static_cast<double>(w.coeff) * iterated_integral(prefix, p, cfg) *
                   iterated_integral(suffix, q, cfg);
        }
    }
    return std::abs(whole - sum);
}

double inversion_residual(const Integrand& I, const PathSpec& p, const EvalConfig& cfg) {
    cplx lhs = iterated_integral(I, inverse(p), cfg);
    cplx rhs = 0.0;
    for (const auto& w : I.words) {
        TensorWord rev{1, {w.letters.rbegin(), w.letters.rend()}};
        double sign = w.letters.size() % 2 == 0 ? 1.0 : -1.0;
        rhs += static_cast<double>(w.coeff) * sign * iterated_integral(rev, p, cfg);
    }
    return std::abs(lhs - rhs);
}

double shuffle_residual(const std::vector<OneForm>& a, const std::vector<OneForm>& b,
                        const PathSpec& p, const EvalConfig& cfg) {
    cplx prod = iterated_integral(TensorWord{1, a}, p, cfg) *
                iterated_integral(TensorWord{1, b}, p, cfg);
    cplx sum = 0.0;
    for (const auto& w : shuffle(a, b)) sum += iterated_integral(TensorWord{1, w}, p, cfg);
    return std::abs(prod - sum);
}

PathSpec subdivided(const PathSpec& p, int parts) {
    if (parts < 1) throw path_error("subdivided: parts must be positive");
    PathSpec r;
    r.start_exempt = p.start_exempt;
    r.end_exempt = p.end_exempt;
    for (const auto& s : p.segments) {
        for (int i = 0; i < parts; ++i) {
            double t0 = static_cast<double>(i) / parts;
            double t1 = static_cast<double>(i + 1) / parts;
            if (const auto* l = std::get_if<LineSeg>(&s)) {
                r.segments.push_back(LineSeg{segment_point(*l, t0), segment_point(*l, t1)});
            } else {
                ArcSeg a = std::get<ArcSeg>(s);
                double th0 = a.theta0 + t0 * (a.theta1 - a.theta0);
                double th1 = a.theta0 + t1 * (a.theta1 - a.theta0);
                a.theta0 = th0;
                a.theta1 = th1;
                r.segments.push_back(a);
            }
        }
    }
    return r;
}

}  // namespace polylog
