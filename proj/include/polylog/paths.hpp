#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polylog/forms.hpp"

namespace polylog {

/// Irreducible component of the singular arrangement in C^n: a coordinate
/// hyperplane {x_j = 0} or a product hypersurface {x_j ... x_k = 1}
/// (0-based indices, j <= k; j == k is {x_j = 1}).
struct DivisorComponent {
    enum class Kind { CoordZero, ProductOne };
    Kind kind;
    int j;
    int k;

    static DivisorComponent coord_zero(int j) { return {Kind::CoordZero, j, j}; }
    static DivisorComponent product_one(int j, int k) { return {Kind::ProductOne, j, k}; }

    bool operator==(const DivisorComponent&) const = default;

    /// Defining function: x_j, or 1 - x_j...x_k.
    cplx defining_value(const Vec& x) const;
    /// dlog of the defining function, as a form.
    OneForm dlog_form() const;
    /// "Z:j" / "D:j,k" with 1-based indices.
    std::string label() const;
};

/// All components of the extended arrangement (coordinate hyperplanes
/// included) in C^n.
std::vector<DivisorComponent> all_components(int n);
/// Parse "Z:j" / "D:j,k" (1-based).
DivisorComponent parse_component(const std::string& spec, int n);

struct LineSeg {
    Vec from;
    Vec to;
};

/// Circle portion in a single coordinate: coordinate `coord` follows
/// center + radius * e^{i theta}, all other coordinates stay at `base`.
struct ArcSeg {
    Vec base;
    int coord;
    cplx center;
    double radius;
    double theta0;
    double theta1;
};

using PathSegment = std::variant<LineSeg, ArcSeg>;

Vec segment_point(const PathSegment& s, double t);
Vec segment_velocity(const PathSegment& s, double t);
Vec segment_start(const PathSegment& s);
Vec segment_end(const PathSegment& s);
double segment_measure(const PathSegment& s);
PathSegment segment_reversed(const PathSegment& s);

/// Piecewise path. start_exempt marks a start on a coordinate hyperplane
/// (the basepoint of the continuation); end_exempt likewise for paths that
/// terminate on one.
struct PathSpec {
    std::vector<PathSegment> segments;
    bool start_exempt = false;
    bool end_exempt = false;

    int dim() const;
    Vec start() const;
    Vec end() const;
    double measure() const;
};

PathSpec line_path(const Vec& from, const Vec& to, bool start_exempt = false,
                   bool end_exempt = false);
PathSpec polyline_path(const std::vector<Vec>& pts, bool start_exempt = false,
                       bool end_exempt = false);
PathSpec compose(const PathSpec& p, const PathSpec& q);
PathSpec inverse(const PathSpec& p);

/// Smallest defining-function magnitude over the arrangement, with the
/// witnessing component.
std::pair<DivisorComponent, double> clearance(const Vec& x);

struct ClearanceViolation {
    DivisorComponent component;
    int segment;
    double t;
    double value;
};

struct ValidationReport {
    double min_clearance = 0.0;
    DivisorComponent at = DivisorComponent::coord_zero(0);
    int segment = 0;
    double t = 0.0;
    std::vector<ClearanceViolation> violations;

    bool ok() const { return violations.empty(); }
};

/// Sample every segment and check defining-function magnitudes against
/// delta_min. Exempt starts (resp. ends) skip the coordinate hyperplanes the
/// start (resp. end) point lies on, near that endpoint only. An optional
/// component subset restricts the check (used when only some singularities
/// are relevant).
ValidationReport validate(const PathSpec& path, double delta_min = 1e-3,
                          int samples_per_segment = 64,
                          const std::vector<DivisorComponent>* subset = nullptr);

/// Winding numbers of the closed path around every component, by argument
/// tracking of the defining functions; throws path_error if the path is not
/// closed or a sampling step turns the argument by nearly pi.
std::vector<int> winding_numbers(const PathSpec& loop, int samples_per_segment = 256);

/// Sufficient homotopy test for paths with identical endpoints: the loop
/// p q^{-1} winds no component.
bool homotopic_in_s_prime(const PathSpec& p, const PathSpec& q, int samples_per_segment = 256);

struct LoopOptions {
    std::optional<double> radius;  // defining-function magnitude on the circle; absent = auto
    double delta_min = 1e-3;
    int samples_per_segment = 256;
};

/// Loop based at `base` around a single component: approach segment in the
/// moving coordinate, full circle winding the defining function exactly
/// `sign` times, return segment. The result is validated and its winding
/// certificate checked; throws path_error when the geometry cannot clear
/// the other components.
PathSpec loop_around(const DivisorComponent& comp, const Vec& base, int moving_coord, int sign,
                     const LoopOptions& opts = {});

/// JSON path format: segments with complex numbers as [re, im] pairs.
std::string path_to_json(const PathSpec& p);
PathSpec path_from_json(const std::string& text);

}  // namespace polylog
