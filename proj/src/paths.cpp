#include "polylog/paths.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <nlohmann/json.hpp>

namespace polylog {

using std::numbers::pi;

cplx DivisorComponent::defining_value(const Vec& x) const {
    if (kind == Kind::CoordZero) return x[j];
    cplx p = 1.0;
    for (int t = j; t <= k; ++t) p *= x[t];
    return 1.0 - p;
}

OneForm DivisorComponent::dlog_form() const {
    return kind == Kind::CoordZero ? dlog_coord(j, j) : dlog_one_minus(j, k);
}

std::string DivisorComponent::label() const {
    if (kind == Kind::CoordZero) return "Z:" + std::to_string(j + 1);
    return "D:" + std::to_string(j + 1) + "," + std::to_string(k + 1);
}

std::vector<DivisorComponent> all_components(int n) {
    std::vector<DivisorComponent> out;
    for (int j = 0; j < n; ++j) out.push_back(DivisorComponent::coord_zero(j));
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k) out.push_back(DivisorComponent::product_one(j, k));
    return out;
}

DivisorComponent parse_component(const std::string& spec, int n) {
    auto bad = [&] { return path_error("bad component spec '" + spec + "'"); };
    if (spec.size() < 3 || spec[1] != ':') throw bad();
    if (spec[0] == 'Z') {
        int j = std::stoi(spec.substr(2));
        if (j < 1 || j > n) throw bad();
        return DivisorComponent::coord_zero(j - 1);
    }
    if (spec[0] == 'D') {
        auto comma = spec.find(',', 2);
        if (comma == std::string::npos) throw bad();
        int j = std::stoi(spec.substr(2, comma - 2));
        int k = std::stoi(spec.substr(comma + 1));
        if (j < 1 || k < j || k > n) throw bad();
        return DivisorComponent::product_one(j - 1, k - 1);
    }
    throw bad();
}

Vec segment_point(const PathSegment& s, double t) {
    if (const auto* l = std::get_if<LineSeg>(&s)) return l->from + t * (l->to - l->from);
    const auto& a = std::get<ArcSeg>(s);
    Vec p = a.base;
    double th = a.theta0 + t * (a.theta1 - a.theta0);
    p[a.coord] = a.center + a.radius * std::polar(1.0, th);
    return p;
}

Vec segment_velocity(const PathSegment& s, double t) {
    if (const auto* l = std::get_if<LineSeg>(&s)) return l->to - l->from;
    const auto& a = std::get<ArcSeg>(s);
    Vec v = Vec::Zero(a.base.size());
    double th = a.theta0 + t * (a.theta1 - a.theta0);
    v[a.coord] = a.radius * (a.theta1 - a.theta0) * cplx(0.0, 1.0) * std::polar(1.0, th);
    return v;
}

Vec segment_start(const PathSegment& s) { return segment_point(s, 0.0); }
Vec segment_end(const PathSegment& s) { return segment_point(s, 1.0); }

double segment_measure(const PathSegment& s) {
    if (const auto* l = std::get_if<LineSeg>(&s)) return (l->to - l->from).norm();
    const auto& a = std::get<ArcSeg>(s);
    return a.radius * std::abs(a.theta1 - a.theta0);
}

PathSegment segment_reversed(const PathSegment& s) {
    if (const auto* l = std::get_if<LineSeg>(&s)) return LineSeg{l->to, l->from};
    ArcSeg a = std::get<ArcSeg>(s);
    std::swap(a.theta0, a.theta1);
    return a;
}

int PathSpec::dim() const {
    if (segments.empty()) throw path_error("empty path");
    return static_cast<int>(segment_start(segments.front()).size());
}

Vec PathSpec::start() const {
    if (segments.empty()) throw path_error("empty path");
    return segment_start(segments.front());
}

Vec PathSpec::end() const {
    if (segments.empty()) throw path_error("empty path");
    return segment_end(segments.back());
}

double PathSpec::measure() const {
    double m = 0.0;
    for (const auto& s : segments) m += segment_measure(s);
    return m;
}

PathSpec line_path(const Vec& from, const Vec& to, bool start_exempt, bool end_exempt) {
    return PathSpec{{LineSeg{from, to}}, start_exempt, end_exempt};
}

PathSpec polyline_path(const std::vector<Vec>& pts, bool start_exempt, bool end_exempt) {
    if (pts.size() < 2) throw path_error("polyline needs at least two points");
    PathSpec p;
    for (size_t i = 0; i + 1 < pts.size(); ++i) p.segments.push_back(LineSeg{pts[i], pts[i + 1]});
    p.start_exempt = start_exempt;
    p.end_exempt = end_exempt;
    return p;
}

PathSpec compose(const PathSpec& p, const PathSpec& q) {
    if ((p.end() - q.start()).norm() > 1e-9)
        throw path_error("compose: endpoint of first path does not match start of second");
    PathSpec r = p;
    r.segments.insert(r.segments.end(), q.segments.begin(), q.segments.end());
    r.end_exempt = q.end_exempt;
    return r;
}

PathSpec inverse(const PathSpec& p) {
    PathSpec r;
    r.segments.reserve(p.segments.size());
    for (auto it = p.segments.rbegin(); it != p.segments.rend(); ++it)
        r.segments.push_back(segment_reversed(*it));
    r.start_exempt = p.end_exempt;
    r.end_exempt = p.start_exempt;
    return r;
}

std::pair<DivisorComponent, double> clearance(const Vec& x) {
    auto comps = all_components(static_cast<int>(x.size()));
    DivisorComponent best = comps.front();
    double bestval = std::abs(comps.front().defining_value(x));
    for (const auto& c : comps) {
        double v = std::abs(c.defining_value(x));
        if (v < bestval) {
            bestval = v;
            best = c;
        }
    }
    return {best, bestval};
}

ValidationReport validate(const PathSpec& path, double delta_min, int samples_per_segment,
                          const std::vector<DivisorComponent>* subset) {
    const int n = path.dim();
    std::vector<DivisorComponent> comps = subset ? *subset : all_components(n);

    // components a declared-exempt endpoint legitimately touches
    std::vector<bool> start_skip(comps.size(), false), end_skip(comps.size(), false);
    if (path.start_exempt) {
        Vec s = path.start();
        for (size_t c = 0; c < comps.size(); ++c)
            if (comps[c].kind == DivisorComponent::Kind::CoordZero &&
                std::abs(s[comps[c].j]) < delta_min)
                start_skip[c] = true;
    }
    if (path.end_exempt) {
        Vec e = path.end();
        for (size_t c = 0; c < comps.size(); ++c)
            if (comps[c].kind == DivisorComponent::Kind::CoordZero &&
                std::abs(e[comps[c].j]) < delta_min)
                end_skip[c] = true;
    }

    ValidationReport rep;
    rep.min_clearance = std::numeric_limits<double>::infinity();
    const int nseg = static_cast<int>(path.segments.size());
    for (int seg = 0; seg < nseg; ++seg) {
        for (int i = 0; i <= samples_per_segment; ++i) {
            double t = static_cast<double>(i) / samples_per_segment;
            Vec x = segment_point(path.segments[seg], t);
            for (size_t c = 0; c < comps.size(); ++c) {
                if (seg == 0 && start_skip[c]) continue;
                if (seg == nseg - 1 && end_skip[c]) continue;
                double v = std::abs(comps[c].defining_value(x));
                if (v < rep.min_clearance) {
                    rep.min_clearance = v;
                    rep.at = comps[c];
                    rep.segment = seg;
                    rep.t = t;
                }
                if (v < delta_min) rep.violations.push_back({comps[c], seg, t, v});
            }
        }
    }
    return rep;
}

namespace {

double arg_sweep(const PathSegment& seg, const DivisorComponent& comp, double t0, double t1,
                 cplx g0, cplx g1, int depth) {
    double d = std::arg(g1 / g0);
    if (std::abs(d) < pi / 2 || depth > 36) {
        if (depth > 36) throw path_error("winding: argument step too coarse near " + comp.label());
        return d;
    }
    double tm = 0.5 * (t0 + t1);
    cplx gm = comp.defining_value(segment_point(seg, tm));
    if (std::abs(gm) < 1e-12) throw path_error("winding: path meets component " + comp.label());
    return arg_sweep(seg, comp, t0, tm, g0, gm, depth + 1) +
           arg_sweep(seg, comp, tm, t1, gm, g1, depth + 1);
}

}  // namespace

std::vector<int> winding_numbers(const PathSpec& loop, int samples_per_segment) {
    if ((loop.start() - loop.end()).norm() > 1e-9) throw path_error("winding: path is not closed");
    const int n = loop.dim();
    auto comps = all_components(n);
    std::vector<double> total(comps.size(), 0.0);

    // components through the basepoint have no well-defined turn count;
    // they are excluded and reported as zero
    Vec base = loop.start();
    std::vector<bool> skip(comps.size(), false);
    for (size_t c = 0; c < comps.size(); ++c)
        skip[c] = std::abs(comps[c].defining_value(base)) < 1e-12;

    for (const auto& seg : loop.segments) {
        for (size_t c = 0; c < comps.size(); ++c) {
            if (skip[c]) continue;
            double acc = 0.0;
            cplx gprev = comps[c].defining_value(segment_point(seg, 0.0));
            if (std::abs(gprev) < 1e-12)
                throw path_error("winding: path meets component " + comps[c].label());
            for (int i = 1; i <= samples_per_segment; ++i) {
                double t0 = static_cast<double>(i - 1) / samples_per_segment;
                double t1 = static_cast<double>(i) / samples_per_segment;
                cplx g = comps[c].defining_value(segment_point(seg, t1));
                if (std::abs(g) < 1e-12)
                    throw path_error("winding: path meets component " + comps[c].label());
                acc += arg_sweep(seg, comps[c], t0, t1, gprev, g, 0);
                gprev = g;
            }
            total[c] += acc;
        }
    }

    std::vector<int> w(comps.size());
    for (size_t c = 0; c < comps.size(); ++c) {
        double turns = total[c] / (2 * pi);
        w[c] = static_cast<int>(std::lround(turns));
        if (std::abs(turns - w[c]) > 1e-6)
            throw path_error("winding: non-integer turn count around " + comps[c].label());
    }
    return w;
}

bool homotopic_in_s_prime(const PathSpec& p, const PathSpec& q, int samples_per_segment) {
    if ((p.start() - q.start()).norm() > 1e-9 || (p.end() - q.end()).norm() > 1e-9)
        throw path_error("homotopy test needs identical endpoints");
    auto w = winding_numbers(compose(p, inverse(q)), samples_per_segment);
    return std::all_of(w.begin(), w.end(), [](int v) { return v == 0; });
}

namespace {

double point_segment_distance(cplx z, cplx a, cplx b) {
    cplx ab = b - a;
    double len2 = std::norm(ab);
    if (len2 == 0.0) return std::abs(z - a);
    double t = std::clamp(((z - a) / ab).real(), 0.0, 1.0);
    return std::abs(z - (a + t * ab));
}

}  // namespace

PathSpec loop_around(const DivisorComponent& comp, const Vec& base, int moving_coord, int sign,
                     const LoopOptions& opts) {
    const int n = static_cast<int>(base.size());
    const int c = moving_coord;
    if (sign != 1 && sign != -1) throw path_error("loop_around: sign must be +1 or -1");
    if (comp.kind == DivisorComponent::Kind::CoordZero) {
        if (c != comp.j) throw path_error("loop_around: moving coordinate must be the vanishing one");
    } else if (c < comp.j || c > comp.k) {
        throw path_error("loop_around: moving coordinate outside the component's range");
    }

    // center of the circle in the moving-coordinate plane
    cplx center = 0.0;
    cplx scale = 1.0;  // |defining| = |scale| * (radius in coordinate)
    if (comp.kind == DivisorComponent::Kind::ProductOne) {
        cplx A = 1.0;
        for (int t = comp.j; t <= comp.k; ++t)
            if (t != c) A *= base[t];
        if (std::abs(A) < 1e-12)
            throw path_error("loop_around: component cannot vanish while a factor is zero");
        center = 1.0 / A;
        scale = A;
    }

    // every other component restricted to the moving-coordinate line is a
    // point obstacle (or constant, which validation covers)
    std::vector<cplx> obstacles;
    for (const auto& other : all_components(n)) {
        if (other == comp) continue;
        if (other.kind == DivisorComponent::Kind::CoordZero) {
            if (other.j == c) obstacles.push_back(0.0);
        } else if (other.j <= c && c <= other.k) {
            cplx B = 1.0;
            for (int t = other.j; t <= other.k; ++t)
                if (t != c) B *= base[t];
            if (std::abs(B) > 1e-12) obstacles.push_back(1.0 / B);
        }
    }

    double nearest = std::numeric_limits<double>::infinity();
    for (cplx o : obstacles) nearest = std::min(nearest, std::abs(o - center));
    double to_base = std::abs(base[c] - center);
    if (to_base < 1e-12) throw path_error("loop_around: base point sits on the component");

    double r;
    if (opts.radius) {
        if (*opts.radius <= 0.0) throw path_error("loop_around: degenerate radius");
        r = *opts.radius / std::abs(scale);
    } else {
        r = 0.35 * std::min(to_base, nearest);
    }
    if (r <= 0.0) throw path_error("loop_around: degenerate radius");
    if (r > 0.75 * nearest || r >= to_base)
        throw path_error("loop_around: requested radius does not clear neighboring components");

    double phi = std::arg(base[c] - center);
    cplx circle_start = center + r * std::polar(1.0, phi);

    auto try_build = [&](const std::vector<cplx>& waypoints) -> std::optional<PathSpec> {
        // approach legs must keep away from every obstacle
        std::vector<cplx> pts;
        pts.push_back(base[c]);
        for (cplx w : waypoints) pts.push_back(w);
        pts.push_back(circle_start);
        double margin = std::max(opts.delta_min, 0.5 * r * std::abs(scale));
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            for (cplx o : obstacles)
                if (point_segment_distance(o, pts[i], pts[i + 1]) * std::abs(scale) < margin)
                    return std::nullopt;
            if (point_segment_distance(center, pts[i], pts[i + 1]) < 0.95 * r &&
                std::abs(pts[i + 1] - circle_start) > 1e-15)
                return std::nullopt;
        }
        PathSpec loop;
        Vec cur = base;
        for (size_t i = 0; i + 1 < pts.size(); ++i) {
            Vec nxt = cur;
            nxt[c] = pts[i + 1];
            loop.segments.push_back(LineSeg{cur, nxt});
            cur = nxt;
        }
        loop.segments.push_back(ArcSeg{cur, c, center, r, phi, phi + sign * 2 * pi});
        for (size_t i = pts.size() - 1; i > 0; --i) {
            Vec from = base, to = base;
            from[c] = pts[i];
            to[c] = pts[i - 1];
            loop.segments.push_back(LineSeg{from, to});
        }
        return loop;
    };

    std::optional<PathSpec> loop = try_build({});
    if (!loop) {
        // dog-leg around an obstacle sitting near the radial approach
        cplx dir = (circle_start - base[c]) / std::abs(circle_start - base[c]);
        for (double side : {1.0, -1.0}) {
            for (double off : {0.4, 0.8}) {
                cplx way = 0.5 * (base[c] + circle_start) + side * off * to_base * cplx(0, 1) * dir;
                loop = try_build({way});
                if (loop) break;
            }
            if (loop) break;
        }
    }
    if (!loop) throw path_error("loop_around: no clear approach to " + comp.label());

    auto rep = validate(*loop, opts.delta_min, 128);
    if (!rep.ok())
        throw path_error("loop_around: clearance violation near " + rep.violations[0].component.label());

    auto w = winding_numbers(*loop, opts.samples_per_segment);
    auto comps = all_components(n);
    for (size_t i = 0; i < comps.size(); ++i) {
        int expect = (comps[i] == comp) ? sign : 0;
        if (w[i] != expect)
            throw path_error("loop_around: winding certificate failed at " + comps[i].label());
    }
    return *loop;
}

namespace {

nlohmann::json cplx_json(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

nlohmann::json vec_json(const Vec& v) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) a.push_back(cplx_json(v[i]));
    return a;
}

cplx cplx_from(const nlohmann::json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

Vec vec_from(const nlohmann::json& j) {
    Vec v(j.size());
    for (size_t i = 0; i < j.size(); ++i) v[static_cast<int>(i)] = cplx_from(j[i]);
    return v;
}

}  // namespace

std::string path_to_json(const PathSpec& p) {
    nlohmann::json j;
    j["start_exempt"] = p.start_exempt;
    j["end_exempt"] = p.end_exempt;
    j["segments"] = nlohmann::json::array();
    for (const auto& s : p.segments) {
        if (const auto* l = std::get_if<LineSeg>(&s)) {
            j["segments"].push_back(
                {{"type", "line"}, {"from", vec_json(l->from)}, {"to", vec_json(l->to)}});
        } else {
            const auto& a = std::get<ArcSeg>(s);
            j["segments"].push_back({{"type", "arc"},
                                     {"base", vec_json(a.base)},
                                     {"coord", a.coord + 1},
                                     {"center", cplx_json(a.center)},
                                     {"radius", a.radius},
                                     {"theta0", a.theta0},
                                     {"theta1", a.theta1}});
        }
    }
    return j.dump(2);
}

PathSpec path_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    PathSpec p;
    p.start_exempt = j.value("start_exempt", false);
    p.end_exempt = j.value("end_exempt", false);
    for (const auto& s : j.at("segments")) {
        std::string type = s.at("type").get<std::string>();
        if (type == "line") {
            p.segments.push_back(LineSeg{vec_from(s.at("from")), vec_from(s.at("to"))});
        } else if (type == "arc") {
            p.segments.push_back(ArcSeg{vec_from(s.at("base")), s.at("coord").get<int>() - 1,
                                        cplx_from(s.at("center")), s.at("radius").get<double>(),
                                        s.at("theta0").get<double>(),
                                        s.at("theta1").get<double>()});
        } else {
            throw path_error("unknown segment type '" + type + "'");
        }
    }
    if (p.segments.empty()) throw path_error("path has no segments");
    return p;
}

}  // namespace polylog
