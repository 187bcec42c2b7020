#pragma once

// Oriented Jordan curves as closed polylines. Vertex order encodes the
// orientation: the region bounded on the left of the traversal is the
// curve's interior, which is the bounded complement for a positive
// (counterclockwise) curve and the unbounded complement for a negative one.

#include <optional>
#include <utility>

#include "yinset/geom.hpp"

namespace yinset {

enum class Orientation { Positive, Negative };

enum class PointLocation { Interior, Exterior, Boundary };

class OrientedJordanCurve {
public:
    // Normalizes the vertex list: consecutive vertices closer than eps are
    // merged (the earlier one wins) including across the closing edge.
    // Rejects curves that are degenerate after normalization; lower
    // dimensional pieces cannot bound a regular open set.
    OrientedJordanCurve(std::vector<Point> vertices, Tolerance tol) {
        for (const Point& p : vertices)
            if (!is_finite(p))
                throw std::invalid_argument("OrientedJordanCurve: non-finite coordinate");
        vertices_ = dedup(std::move(vertices), tol);
        if (vertices_.size() < 3)
            throw std::invalid_argument(
                "OrientedJordanCurve: fewer than 3 distinct vertices after eps-deduplication");
        area_ = signed_area(vertices_);
        if (std::abs(area_) <= tol.eps * tol.eps)
            throw std::invalid_argument("OrientedJordanCurve: enclosed area within eps^2 of zero");
    }

    const std::vector<Point>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }

    Segment edge(std::size_t i) const {
        return {vertices_[i], vertices_[(i + 1) % vertices_.size()]};
    }

    double area() const { return area_; }
    Orientation orientation() const {
        return area_ > 0.0 ? Orientation::Positive : Orientation::Negative;
    }

    OrientedJordanCurve reversed(Tolerance tol) const {
        std::vector<Point> rev(vertices_.rbegin(), vertices_.rend());
        return OrientedJordanCurve(std::move(rev), tol);
    }

    struct BBox {
        double xmin, ymin, xmax, ymax;
        bool contains(Point p, double margin) const {
            return p.x >= xmin - margin && p.x <= xmax + margin && p.y >= ymin - margin &&
                   p.y <= ymax + margin;
        }
    };

    const BBox& bbox() const {
        if (!bbox_) {
            BBox b{vertices_[0].x, vertices_[0].y, vertices_[0].x, vertices_[0].y};
            for (const Point& p : vertices_) {
                b.xmin = std::min(b.xmin, p.x);
                b.ymin = std::min(b.ymin, p.y);
                b.xmax = std::max(b.xmax, p.x);
                b.ymax = std::max(b.ymax, p.y);
            }
            bbox_ = b;
        }
        return *bbox_;
    }

    double min_distance(Point p) const {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            best = std::min(best, point_segment_distance(p, edge(i)));
        return best;
    }

    // Crossing-parity test against the polygon outline: true when p lies in
    // the bounded complement. Half-open edge rule keeps vertex hits
    // consistent; callers guarantee p is at least eps off the boundary.
    bool bounded_side_contains(Point p) const {
        if (!bbox().contains(p, 0.0)) return false;
        bool inside = false;
        const std::size_t n = vertices_.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point& a = vertices_[i];
            const Point& b = vertices_[(i + 1) % n];
            if ((a.y <= p.y) != (b.y <= p.y)) {
                const double x_cross = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
                if (x_cross > p.x) inside = !inside;
            }
        }
        return inside;
    }

private:
    static std::vector<Point> dedup(std::vector<Point> in, Tolerance tol) {
        std::vector<Point> out;
        out.reserve(in.size());
        for (const Point& p : in) {
            if (out.empty() || !points_equal(out.back(), p, tol)) out.push_back(p);
        }
        while (out.size() >= 2 && points_equal(out.front(), out.back(), tol)) out.pop_back();
        return out;
    }

    std::vector<Point> vertices_;
    double area_ = 0.0;
    mutable std::optional<BBox> bbox_;
};

inline Orientation orientation(const OrientedJordanCurve& c) { return c.orientation(); }

// Three-valued location of p relative to a single oriented curve, per the
// left-of-traversal interior convention.
inline PointLocation interior_contains(const OrientedJordanCurve& c, Point p, Tolerance tol) {
    if (c.bbox().contains(p, tol.eps) && c.min_distance(p) < tol.eps)
        return PointLocation::Boundary;
    const bool bounded = c.bounded_side_contains(p);
    const bool inside = (c.orientation() == Orientation::Positive) ? bounded : !bounded;
    return inside ? PointLocation::Interior : PointLocation::Exterior;
}

// A point strictly inside the bounded complement of the curve, found as the
// centroid of an ear triangle. `clear_of` curves, if given, must stay
// farther than eps from the sample; candidate ears are tried until one
// qualifies.
inline Point interior_sample_point(const OrientedJordanCurve& c,
                                   std::span<const OrientedJordanCurve* const> clear_of,
                                   Tolerance tol) {
    // Work on the counterclockwise ordering so "convex corner" means the
    // ear points into the bounded complement.
    std::vector<Point> poly = c.vertices();
    if (c.area() < 0.0) std::reverse(poly.begin(), poly.end());
    const std::size_t n = poly.size();

    auto try_sample = [&](Point s) -> bool {
        if (c.min_distance(s) <= tol.eps || !c.bounded_side_contains(s)) return false;
        for (const OrientedJordanCurve* other : clear_of)
            if (other->bbox().contains(s, tol.eps) && other->min_distance(s) <= tol.eps)
                return false;
        return true;
    };

    for (std::size_t i = 0; i < n; ++i) {
        const Point prev = poly[(i + n - 1) % n];
        const Point v = poly[i];
        const Point next = poly[(i + 1) % n];
        if (cross(v - prev, next - v) <= 0.0) continue;  // reflex corner
        // Shrink toward the corner until the triangle is empty of other
        // vertices and the centroid qualifies.
        Point a = prev, b = next;
        for (int shrink = 0; shrink < 48; ++shrink) {
            bool empty = true;
            for (std::size_t k = 0; k < n && empty; ++k) {
                if (k == i || k == (i + n - 1) % n || k == (i + 1) % n) continue;
                const Point& q = poly[k];
                const bool in_tri = cross(v - a, q - a) >= 0 && cross(b - v, q - v) >= 0 &&
                                    cross(a - b, q - b) >= 0;
                if (in_tri) empty = false;
            }
            const Point centroid = (a + v + b) * (1.0 / 3.0);
            if (empty && try_sample(centroid)) return centroid;
            a = (a + v) * 0.5;
            b = (b + v) * 0.5;
        }
    }
    throw std::runtime_error("interior_sample_point: no admissible ear found");
}

inline Point interior_sample_point(const OrientedJordanCurve& c, Tolerance tol) {
    return interior_sample_point(c, {}, tol);
}

}  // namespace yinset
