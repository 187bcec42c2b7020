#pragma once

// Planar primitives with a global distance tolerance. Two points closer
// than Tolerance::eps are considered the same point; every predicate in
// the library derives its fuzziness from that single parameter.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace yinset {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend constexpr bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(Point a, double s) { return {a.x * s, a.y * s}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// Lexicographic order (x, then y); the deterministic tie-breaker used by
// clustering, canonicalization, and the sweep event queue.
inline bool lex_less(Point a, Point b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
}

struct LexLess {
    bool operator()(Point a, Point b) const { return lex_less(a, b); }
};

inline bool is_finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

struct Tolerance {
    double eps;

    explicit Tolerance(double e) : eps(e) {
        if (!(e > 0.0)) throw std::invalid_argument("Tolerance: eps must be > 0");
    }
};

inline bool points_equal(Point p, Point q, Tolerance tol) {
    return distance(p, q) < tol.eps;
}

// Directed segment. Callers keep endpoints farther apart than eps; the
// library never constructs shorter edges after normalization.
struct Segment {
    Point a;
    Point b;

    Point dir() const { return b - a; }
    double length() const { return distance(a, b); }
};

inline std::string point_str(Point p) {
    return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")";
}

// Shoelace sum of an implicitly closed vertex list. Positive for
// counterclockwise order.
inline double signed_area(std::span<const Point> vertices) {
    if (vertices.size() < 3)
        throw std::invalid_argument("signed_area: a closed curve needs at least 3 vertices");
    double twice = 0.0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const Point& p = vertices[i];
        const Point& q = vertices[(i + 1) % vertices.size()];
        twice += cross(p, q);
    }
    return 0.5 * twice;
}

inline double signed_area(const std::vector<Point>& vertices) {
    return signed_area(std::span<const Point>(vertices));
}

// Positive counterclockwise rotation taking ref_dir onto dir, in (0, 2*pi].
// Coincident directions map to a full turn, never to zero, so a
// smallest-positive-angle selection cannot pick a U-turn.
inline double ccw_angle(Point ref_dir, Point dir) {
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    if (norm(ref_dir) == 0.0 || norm(dir) == 0.0)
        throw std::invalid_argument("ccw_angle: zero-length direction");
    double a = std::atan2(dir.y, dir.x) - std::atan2(ref_dir.y, ref_dir.x);
    a = std::fmod(a, kTwoPi);
    if (a <= 0.0) a += kTwoPi;
    if (a <= 1e-12 || kTwoPi - a <= 1e-12) return kTwoPi;
    return a;
}

// Closest point of the closed segment s to p.
inline Point closest_point_on_segment(Point p, const Segment& s) {
    const Point d = s.dir();
    const double len2 = dot(d, d);
    if (len2 == 0.0) return s.a;
    double t = dot(p - s.a, d) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return s.a + d * t;
}

inline double point_segment_distance(Point p, const Segment& s) {
    return distance(p, closest_point_on_segment(p, s));
}

// Parameter in [0,1] of the point of s closest to p.
inline double segment_param(Point p, const Segment& s) {
    const Point d = s.dir();
    const double len2 = dot(d, d);
    if (len2 == 0.0) return 0.0;
    return std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
}

inline double point_line_distance(Point p, Point a, Point b) {
    const double len = distance(a, b);
    if (len == 0.0) return distance(p, a);
    return std::abs(cross(b - a, p - a)) / len;
}

enum class IntersectionKind { None, AtPoint, CollinearOverlap };

struct IntersectionResult {
    IntersectionKind kind = IntersectionKind::None;
    Point point{};      // valid when kind == AtPoint
    Segment overlap{};  // valid when kind == CollinearOverlap

    static IntersectionResult none() { return {}; }
    static IntersectionResult at(Point p) { return {IntersectionKind::AtPoint, p, {}}; }
    static IntersectionResult over(Segment s) {
        return {IntersectionKind::CollinearOverlap, {}, s};
    }
};

namespace detail {

// Snap p to the lexicographically smallest candidate endpoint within eps.
inline Point snap_to_endpoints(Point p, std::span<const Point> candidates, Tolerance tol) {
    const Point* best = nullptr;
    for (const Point& c : candidates) {
        if (distance(p, c) < tol.eps && (!best || lex_less(c, *best))) best = &c;
    }
    return best ? *best : p;
}

inline double segment_segment_distance(const Segment& s1, const Segment& s2) {
    // Proper crossing has distance zero; otherwise the minimum is realized
    // at an endpoint of one segment against the other.
    const double d1 = cross(s1.dir(), s2.a - s1.a);
    const double d2 = cross(s1.dir(), s2.b - s1.a);
    const double d3 = cross(s2.dir(), s1.a - s2.a);
    const double d4 = cross(s2.dir(), s1.b - s2.a);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0)) && d1 != 0 && d2 != 0 && d3 != 0 &&
        d4 != 0)
        return 0.0;
    double m = point_segment_distance(s2.a, s1);
    m = std::min(m, point_segment_distance(s2.b, s1));
    m = std::min(m, point_segment_distance(s1.a, s2));
    m = std::min(m, point_segment_distance(s1.b, s2));
    return m;
}

}  // namespace detail

// Epsilon-tolerant intersection of two directed segments.
//
//  - CollinearOverlap: the segments are within eps of one common supporting
//    line and share more than eps of extent; the overlap is the maximal
//    common sub-segment, with its endpoints snapped onto existing ones.
//  - AtPoint: the segments pass within eps of a common point (including
//    collinear segments that merely touch end to end, so that touching
//    curves with locally parallel edges still register an intersection).
//  - None otherwise.
inline IntersectionResult segment_intersect(const Segment& s1, const Segment& s2,
                                            Tolerance tol) {
    const Point ends[4] = {s1.a, s1.b, s2.a, s2.b};

    const bool collinear = point_line_distance(s2.a, s1.a, s1.b) < tol.eps &&
                           point_line_distance(s2.b, s1.a, s1.b) < tol.eps &&
                           point_line_distance(s1.a, s2.a, s2.b) < tol.eps &&
                           point_line_distance(s1.b, s2.a, s2.b) < tol.eps;
    if (collinear) {
        const Point d = s1.dir();
        const double len = s1.length();
        const Point u = d * (1.0 / len);
        double lo2 = dot(s2.a - s1.a, u);
        double hi2 = dot(s2.b - s1.a, u);
        if (lo2 > hi2) std::swap(lo2, hi2);
        const double lo = std::max(0.0, lo2);
        const double hi = std::min(len, hi2);
        if (hi - lo > tol.eps) {
            Point p = detail::snap_to_endpoints(s1.a + u * lo, ends, tol);
            Point q = detail::snap_to_endpoints(s1.a + u * hi, ends, tol);
            return IntersectionResult::over({p, q});
        }
        if (hi - lo >= -tol.eps) {
            const Point mid = s1.a + u * (0.5 * (lo + hi));
            return IntersectionResult::at(detail::snap_to_endpoints(mid, ends, tol));
        }
        return IntersectionResult::none();
    }

    if (detail::segment_segment_distance(s1, s2) >= tol.eps) return IntersectionResult::none();

    const Point d1 = s1.dir();
    const Point d2 = s2.dir();
    const double denom = cross(d1, d2);
    if (denom != 0.0) {
        const double t = cross(s2.a - s1.a, d2) / denom;
        const double u = cross(s2.a - s1.a, d1) / denom;
        const double te = tol.eps / s1.length();
        const double ue = tol.eps / s2.length();
        if (t >= -te && t <= 1.0 + te && u >= -ue && u <= 1.0 + ue) {
            const Point p = s1.a + d1 * std::clamp(t, 0.0, 1.0);
            return IntersectionResult::at(detail::snap_to_endpoints(p, ends, tol));
        }
    }
    // Near-parallel or out-of-range approach closer than eps: take the point
    // on s1 realizing the minimum distance.
    double best = std::numeric_limits<double>::infinity();
    Point bp = s1.a;
    for (const Point& c : {s2.a, s2.b}) {
        const Point q = closest_point_on_segment(c, s1);
        const double dd = distance(q, c);
        if (dd < best) {
            best = dd;
            bp = q;
        }
    }
    for (const Point& c : {s1.a, s1.b}) {
        const Point q = closest_point_on_segment(c, s2);
        const double dd = distance(q, c);
        if (dd < best) {
            best = dd;
            bp = c;
        }
    }
    return IntersectionResult::at(detail::snap_to_endpoints(bp, ends, tol));
}

// Deterministic epsilon-ball clustering. Points are visited in ascending
// lexicographic order; each joins the first existing cluster whose
// representative lies within eps, else it founds a new cluster with itself
// as the representative. Returns representatives plus, for each input
// index, the representative index it was assigned to.
struct Clustering {
    std::vector<Point> representatives;
    std::vector<std::size_t> assignment;  // input index -> representative index
};

inline Clustering cluster_points(std::span<const Point> points, Tolerance tol) {
    std::vector<std::size_t> order(points.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t i, std::size_t j) { return lex_less(points[i], points[j]); });

    Clustering out;
    out.assignment.resize(points.size());
    // Representatives are created in ascending lexicographic order, so a
    // binary search by x bounds the candidate window.
    for (std::size_t idx : order) {
        const Point p = points[idx];
        std::size_t found = out.representatives.size();
        const double x_lo = p.x - tol.eps;
        std::size_t lo = std::lower_bound(out.representatives.begin(), out.representatives.end(),
                                          x_lo, [](const Point& r, double v) { return r.x < v; }) -
                         out.representatives.begin();
        for (std::size_t k = lo; k < out.representatives.size(); ++k) {
            if (distance(p, out.representatives[k]) < tol.eps) {
                found = k;
                break;
            }
        }
        if (found == out.representatives.size()) out.representatives.push_back(p);
        out.assignment[idx] = found;
    }
    return out;
}

}  // namespace yinset
