#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "polylog/indices.hpp"

namespace polylog {

using cplx = std::complex<double>;
using Vec = Eigen::VectorXcd;

/// dlog atom over a contiguous coordinate range [lo,hi] (0-based,
/// inclusive): Coord is dlog(x_lo...x_hi), OneMinus is dlog(1-x_lo...x_hi).
struct LogAtom {
    enum class Kind : std::uint8_t { Coord, OneMinus };
    Kind kind;
    int lo;
    int hi;

    auto operator<=>(const LogAtom&) const = default;
};

inline LogAtom coord_atom(int t) { return {LogAtom::Kind::Coord, t, t}; }
inline LogAtom one_minus_atom(int lo, int hi) { return {LogAtom::Kind::OneMinus, lo, hi}; }

/// Integer combination of dlog atoms, kept canonical: Coord atoms are
/// expanded to single coordinates, terms sorted, zero coefficients dropped.
/// Equality of the term lists is then equality of forms.
class OneForm {
  public:
    OneForm() = default;

    void add(const LogAtom& atom, int coeff);
    OneForm& operator+=(const OneForm& o);
    OneForm& operator-=(const OneForm& o);
    OneForm operator-() const;
    friend OneForm operator+(OneForm a, const OneForm& b) { return a += b; }
    friend OneForm operator-(OneForm a, const OneForm& b) { return a -= b; }

    bool is_zero() const { return terms_.empty(); }
    const std::vector<std::pair<LogAtom, int>>& terms() const { return terms_; }

    bool operator==(const OneForm&) const = default;
    auto operator<=>(const OneForm&) const = default;

  private:
    std::vector<std::pair<LogAtom, int>> terms_;  // sorted by atom
};

/// dlog(x_lo...x_hi) expanded into single-coordinate atoms.
OneForm dlog_coord(int lo, int hi);
/// dlog(1 - x_lo...x_hi).
OneForm dlog_one_minus(int lo, int hi);
/// dy/(1-y) for y = x_lo...x_hi, i.e. -dlog(1-y).
OneForm w_one_minus_frac(int lo, int hi);
/// dy/(y(y-1)) for y = x_lo...x_hi, i.e. dlog(1-y) - dlog(y).
OneForm w_pole_frac(int lo, int hi);

/// Contiguous blocks [tau_m, tau_{m+1}-1] substituted for the slots of an
/// index: block m covers the coordinates whose product is y_m.
struct VariableMap {
    std::vector<std::pair<int, int>> blocks;  // 0-based inclusive ranges
    int depth() const { return static_cast<int>(blocks.size()); }
};

VariableMap variable_map(const MultiIndex& i);

/// Letter of the continuation formula for step r (0-based) of a queue under
/// branch bit delta, written in the blocks of the already-transposed index.
/// Returns the zero form for the vanishing cases.
OneForm build_w(const IndexQueue& queue, int r, int delta, const MultiIndex& effective_index);

/// Multiple-logarithm letter w_{f+1}(x(i)) as a single composite form, f the
/// 0-based block slot: f = 0 gives dy_0/(1-y_0); f >= 1 adds the
/// dy_{f-1}/(y_{f-1}(y_{f-1}-1)) part.
OneForm multilog_letter(int f, const MultiIndex& i);
/// The same letter split into its distributable parts (one or two forms).
std::vector<OneForm> multilog_letter_parts(int f, const MultiIndex& i);

struct FormEvalOptions {
    double singular_tol = 1e-9;
};

/// Value of the form contracted with a tangent vector at a point:
/// sum of coeff * (d/dt) log g(point + t*velocity) at t=0.
cplx pullback_eval(const OneForm& form, const Vec& point, const Vec& velocity,
                   const FormEvalOptions& opts = {});

/// (w1 ^ w2)(u, v) = w1(u) w2(v) - w1(v) w2(u) at the point.
cplx two_form_eval(const OneForm& w1, const OneForm& w2, const Vec& point, const Vec& u,
                   const Vec& v, const FormEvalOptions& opts = {});

/// |w_2(X,Y) - w_1((1-XY)/(1-X))| contracted with the direction (u1,u2),
/// the right-hand side pulled through the substitution analytically.
double w2w1_residual(cplx X, cplx Y, cplx u1 = cplx(1.0, 0.3), cplx u2 = cplx(0.7, -0.2),
                     const FormEvalOptions& opts = {});

/// Coordinate label: x,y,z for n <= 3, else x1,x2,...
std::string coord_name(int t, int n);

/// Paper-style fraction rendering; falls back to a dlog sum for forms that
/// are not a single case shape.
std::string render_form(const OneForm& form, int n);

}  // namespace polylog
