#include "polylog/forms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace polylog {

void OneForm::add(const LogAtom& atom, int coeff) {
    if (coeff == 0) return;
    if (atom.kind == LogAtom::Kind::Coord && atom.lo != atom.hi) {
        for (int t = atom.lo; t <= atom.hi; ++t) add(coord_atom(t), coeff);
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), atom,
                               [](const auto& term, const LogAtom& a) { return term.first < a; });
    if (it != terms_.end() && it->first == atom) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else {
        terms_.insert(it, {atom, coeff});
    }
}

OneForm& OneForm::operator+=(const OneForm& o) {
    for (const auto& [atom, c] : o.terms_) add(atom, c);
    return *this;
}

OneForm& OneForm::operator-=(const OneForm& o) {
    for (const auto& [atom, c] : o.terms_) add(atom, -c);
    return *this;
}

OneForm OneForm::operator-() const {
    OneForm r;
    r.terms_ = terms_;
    for (auto& [atom, c] : r.terms_) c = -c;
    return r;
}

OneForm dlog_coord(int lo, int hi) {
    OneForm f;
    f.add({LogAtom::Kind::Coord, lo, hi}, 1);
    return f;
}

OneForm dlog_one_minus(int lo, int hi) {
    OneForm f;
    f.add(one_minus_atom(lo, hi), 1);
    return f;
}

OneForm w_one_minus_frac(int lo, int hi) { return -dlog_one_minus(lo, hi); }

OneForm w_pole_frac(int lo, int hi) { return dlog_one_minus(lo, hi) - dlog_coord(lo, hi); }

VariableMap variable_map(const MultiIndex& i) {
    auto tau = nonzero_positions(i);
    if (tau.empty()) throw error("variable_map: zero index has no variables");
    const int n = i.size();
    VariableMap vm;
    vm.blocks.reserve(tau.size());
    for (size_t m = 0; m < tau.size(); ++m) {
        int hi = (m + 1 < tau.size()) ? tau[m + 1] - 1 : n - 1;
        vm.blocks.push_back({tau[m], hi});
    }
    return vm;
}

OneForm build_w(const IndexQueue& queue, int r, int delta, const MultiIndex& effective_index) {
    const QueueStep& d = queue.step(r);
    if (d.t_s > 1) {
        if (delta == 1) return OneForm{};
        auto [lo, hi] = variable_map(effective_index).blocks.at(d.lambda);
        return dlog_coord(lo, hi);
    }
    // t_s = 1
    if (delta == 0) {
        auto [lo, hi] = variable_map(effective_index).blocks.at(d.lambda);
        return w_one_minus_frac(lo, hi);
    }
    if (d.lambda == d.l - 1) return OneForm{};
    auto [lo, hi] = variable_map(effective_index).blocks.at(d.lambda);
    return w_pole_frac(lo, hi);
}

OneForm multilog_letter(int f, const MultiIndex& i) {
    OneForm w;
    for (const auto& part : multilog_letter_parts(f, i)) w += part;
    return w;
}

std::vector<OneForm> multilog_letter_parts(int f, const MultiIndex& i) {
    VariableMap vm = variable_map(i);
    if (f < 0 || f >= vm.depth()) throw error("multilog_letter: slot out of range");
    std::vector<OneForm> parts;
    auto [lo, hi] = vm.blocks[f];
    parts.push_back(w_one_minus_frac(lo, hi));
    if (f >= 1) {
        auto [plo, phi] = vm.blocks[f - 1];
        parts.push_back(w_pole_frac(plo, phi));
    }
    return parts;
}

namespace {

// product of coordinates over [lo,hi] and its directional derivative,
// computed without dividing by any coordinate
void product_and_derivative(const Vec& x, const Vec& v, int lo, int hi, cplx& prod, cplx& dprod) {
    prod = 1.0;
    dprod = 0.0;
    for (int t = lo; t <= hi; ++t) {
        dprod = dprod * x[t] + prod * v[t];
        prod *= x[t];
    }
}

}  // namespace

cplx pullback_eval(const OneForm& form, const Vec& point, const Vec& velocity,
                   const FormEvalOptions& opts) {
    cplx total = 0.0;
    for (const auto& [atom, coeff] : form.terms()) {
        if (atom.hi >= point.size()) throw error("pullback_eval: atom exceeds point dimension");
        cplx val;
        if (atom.kind == LogAtom::Kind::Coord) {
            cplx g = point[atom.lo];
            if (std::abs(g) < opts.singular_tol)
                throw singular_error("pullback_eval: coordinate within tolerance of zero");
            val = velocity[atom.lo] / g;
        } else {
            cplx prod, dprod;
            product_and_derivative(point, velocity, atom.lo, atom.hi, prod, dprod);
            cplx g = 1.0 - prod;
            if (std::abs(g) < opts.singular_tol)
                throw singular_error("pullback_eval: product within tolerance of one");
            val = -dprod / g;
        }
        total += static_cast<double>(coeff) * val;
    }
    return total;
}

cplx two_form_eval(const OneForm& w1, const OneForm& w2, const Vec& point, const Vec& u,
                   const Vec& v, const FormEvalOptions& opts) {
    return pullback_eval(w1, point, u, opts) * pullback_eval(w2, point, v, opts) -
           pullback_eval(w1, point, v, opts) * pullback_eval(w2, point, u, opts);
}

double w2w1_residual(cplx X, cplx Y, cplx u1, cplx u2, const FormEvalOptions& opts) {
    Vec p(2), vel(2);
    p << X, Y;
    vel << u1, u2;
    // w_2 in two variables: dlog(1-x^{-1}) - dlog(1-y)
    OneForm w2 = w_pole_frac(0, 0) + w_one_minus_frac(1, 1);
    cplx lhs = pullback_eval(w2, p, vel, opts);

    cplx denom = 1.0 - X;
    if (std::abs(denom) < opts.singular_tol || std::abs(X) < opts.singular_tol)
        throw singular_error("w2w1_residual: substitution singular");
    cplx g = (1.0 - X * Y) / denom;
    cplx dg = ((1.0 - Y) / (denom * denom)) * u1 + (-X / denom) * u2;
    cplx one_minus_g = 1.0 - g;
    if (std::abs(one_minus_g) < opts.singular_tol)
        throw singular_error("w2w1_residual: w_1 argument within tolerance of one");
    cplx rhs = dg / one_minus_g;
    return std::abs(lhs - rhs);
}

std::string coord_name(int t, int n) {
    if (n <= 3) {
        static const char* names[] = {"x", "y", "z"};
        return names[t];
    }
    return "x" + std::to_string(t + 1);
}

namespace {

std::string product_name(int lo, int hi, int n) {
    std::string s;
    for (int t = lo; t <= hi; ++t) s += coord_name(t, n);
    return s;
}

}  // namespace

std::string render_form(const OneForm& form, int n) {
    if (form.is_zero()) return "0";
    const auto& ts = form.terms();

    // -dlog(1-A)  ->  dA/(1-A)
    if (ts.size() == 1 && ts[0].first.kind == LogAtom::Kind::OneMinus && ts[0].second == -1) {
        std::string A = product_name(ts[0].first.lo, ts[0].first.hi, n);
        std::string dA = (ts[0].first.lo == ts[0].first.hi) ? "d" + A : "d(" + A + ")";
        return dA + "/(1-" + A + ")";
    }
    // dlog(A) -> dA/A, possibly a contiguous run of single Coord atoms
    bool all_coord = true;
    for (const auto& [atom, c] : ts)
        all_coord = all_coord && atom.kind == LogAtom::Kind::Coord && c == 1;
    if (all_coord) {
        bool contiguous = true;
        for (size_t k = 1; k < ts.size(); ++k)
            contiguous = contiguous && ts[k].first.lo == ts[k - 1].first.lo + 1;
        if (contiguous) {
            int lo = ts.front().first.lo, hi = ts.back().first.lo;
            std::string A = product_name(lo, hi, n);
            std::string dA = (lo == hi) ? "d" + A : "d(" + A + ")";
            return dA + "/" + (lo == hi ? A : "(" + A + ")");
        }
    }
    // dlog(1-A) - dlog(A) -> dA/(A(A-1))
    if (ts.size() >= 2) {
        const auto* om = &ts.back();
        if (om->first.kind == LogAtom::Kind::OneMinus && om->second == 1 &&
            static_cast<int>(ts.size()) == om->first.hi - om->first.lo + 2) {
            bool match = true;
            for (int k = 0; k <= om->first.hi - om->first.lo; ++k) {
                const auto& [atom, c] = ts[k];
                match = match && atom.kind == LogAtom::Kind::Coord &&
                        atom.lo == om->first.lo + k && c == -1;
            }
            if (match) {
                std::string A = product_name(om->first.lo, om->first.hi, n);
                std::string dA = (om->first.lo == om->first.hi) ? "d" + A : "d(" + A + ")";
                return dA + "/(" + A + "(" + A + "-1))";
            }
        }
    }
    // fallback: signed sum of dlog atoms
    std::ostringstream os;
    bool first = true;
    for (const auto& [atom, c] : ts) {
        std::string g = atom.kind == LogAtom::Kind::Coord
                            ? product_name(atom.lo, atom.hi, n)
                            : "1-" + product_name(atom.lo, atom.hi, n);
        for (int k = 0; k < std::abs(c); ++k) {
            os << (c > 0 ? (first ? "" : "+") : "-") << "dlog(" << g << ")";
            first = false;
        }
    }
    return os.str();
}

}  // namespace polylog
