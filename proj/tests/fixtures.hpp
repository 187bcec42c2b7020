#pragma once

// Shared geometry fixtures and randomized input generators for the test
// suites and the acceptance runner.

#include <random>

#include "yinset/yinset.hpp"

namespace fixtures {

using namespace yinset;

inline std::vector<Point> rect(double x0, double y0, double x1, double y1, bool ccw = true) {
    std::vector<Point> v{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
    if (!ccw) std::reverse(v.begin(), v.end());
    return v;
}

inline OrientedJordanCurve rect_curve(double x0, double y0, double x1, double y1, bool ccw,
                                      Tolerance tol) {
    return OrientedJordanCurve(rect(x0, y0, x1, y1, ccw), tol);
}

inline std::vector<Point> square(double x0, double y0, double side, bool ccw = true) {
    return rect(x0, y0, x0 + side, y0 + side, ccw);
}

inline OrientedJordanCurve diamond(Point c, double r, bool ccw, Tolerance tol) {
    std::vector<Point> v{{c.x, c.y - r}, {c.x + r, c.y}, {c.x, c.y + r}, {c.x - r, c.y}};
    if (!ccw) std::reverse(v.begin(), v.end());
    return OrientedJordanCurve(v, tol);
}

// Seven curves with the nesting of the paper's four-component example:
// gamma1 and gamma4 are positive roots touching at two points; gamma4
// carries three negative holes; gamma2 and gamma3 are positive islands
// inside two of the holes. Curve order: g1, g2, g3, g4, g5, g6, g7.
inline std::vector<OrientedJordanCurve> four_component_fixture(Tolerance tol) {
    std::vector<OrientedJordanCurve> c;
    c.emplace_back(std::vector<Point>{{0, 3}, {-1, 5}, {0, 7}, {-5, 7}, {-5, 3}}, tol);  // g1
    c.push_back(rect_curve(2, 2, 3, 3, true, tol));                                      // g2
    c.push_back(rect_curve(7, 2, 8, 3, true, tol));                                      // g3
    c.push_back(rect_curve(0, 0, 10, 10, true, tol));                                    // g4
    c.push_back(rect_curve(1, 1, 4, 4, false, tol));                                     // g5
    c.push_back(rect_curve(6, 1, 9, 4, false, tol));                                     // g6
    c.push_back(rect_curve(5, 6, 8, 9, false, tol));                                     // g7
    return c;
}

inline std::array<Point, 2> four_component_touch_points() {
    return {Point{0, 3}, Point{0, 7}};
}

// Ten curves with the panda's Hasse structure: six atoms with hole counts
// [2, 1, 1, 0, 0, 0].
inline std::vector<OrientedJordanCurve> panda_fixture(Tolerance tol) {
    std::vector<OrientedJordanCurve> c;
    c.push_back(rect_curve(0, 0, 20, 20, true, tol));            // g1 body
    c.push_back(rect_curve(2, 10, 8, 16, false, tol));           // g2 left patch
    c.push_back(rect_curve(12, 10, 18, 16, false, tol));         // g3 right patch
    c.push_back(rect_curve(3, 11, 7, 15, true, tol));            // g4 left eye
    c.push_back(rect_curve(13, 11, 17, 15, true, tol));          // g5 right eye
    c.push_back(rect_curve(4.5, 12.5, 5.5, 13.5, true, tol));    // g6 left pupil
    c.push_back(rect_curve(14.5, 12.5, 15.5, 13.5, true, tol));  // g7 right pupil
    c.push_back(rect_curve(4, 12, 6, 14, false, tol));           // g8 left iris hole
    c.push_back(rect_curve(14, 12, 16, 14, false, tol));         // g9 right iris hole
    c.push_back(rect_curve(22, 0, 26, 4, true, tol));            // g10 blob
    return c;
}

// Two positive triangles joined at the origin.
inline std::vector<OrientedJordanCurve> bowtie_fixture(Tolerance tol) {
    std::vector<OrientedJordanCurve> c;
    c.emplace_back(std::vector<Point>{{0, 0}, {2, 0}, {2, 2}}, tol);
    c.emplace_back(std::vector<Point>{{0, 0}, {-2, 0}, {-2, -2}}, tol);
    return c;
}

// A square with two diamond holes tangent at (3, 3); cutting the holes at
// extra points forces the pasting walk through the tangency twice, which
// exercises the loop-splitting step.
inline std::vector<OrientedJordanCurve> tangent_holes_fixture(Tolerance tol) {
    std::vector<OrientedJordanCurve> c;
    c.push_back(rect_curve(0, 0, 6, 6, true, tol));
    c.push_back(diamond({3, 4}, 1, false, tol));
    c.push_back(diamond({3, 2}, 1, false, tol));
    return c;
}

// ---------------------------------------------------------------------------
// Randomized generators.
// ---------------------------------------------------------------------------

struct GenParams {
    int max_roots = 3;
    int max_children = 2;
    int max_depth = 3;      // 1 = roots only
    int min_verts = 5;
    int max_verts = 14;
    double margin = 0.02;   // clearance kept inside [0,1]^2
};

// Features stay coarse enough for raster oracles (pair with a 512 grid).
inline GenParams well_resolved_params() {
    GenParams p;
    p.max_depth = 2;
    p.max_children = 2;
    return p;
}

namespace detail {

inline OrientedJordanCurve star_polygon(std::mt19937& rng, Point center, double rmin, double rmax,
                                        int kmin, int kmax, bool ccw, Tolerance tol) {
    std::uniform_int_distribution<int> kd(kmin, kmax);
    std::uniform_real_distribution<double> rd(rmin, rmax);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const int k = kd(rng);
    // Strictly increasing angles with bounded gaps keep the polygon simple,
    // its vertices separated, and a disk of radius ~0.6*rmin inscribed, so
    // nested children have guaranteed room.
    std::vector<double> ang(static_cast<std::size_t>(k));
    double acc = ud(rng) * 2.0 * std::numbers::pi;
    std::vector<double> gaps(static_cast<std::size_t>(k));
    double total = 0.0;
    for (double& g : gaps) {
        g = 0.75 + 0.5 * ud(rng);
        total += g;
    }
    for (int i = 0; i < k; ++i) {
        ang[static_cast<std::size_t>(i)] = acc;
        acc += gaps[static_cast<std::size_t>(i)] / total * 2.0 * std::numbers::pi;
    }
    std::vector<Point> v;
    for (int i = 0; i < k; ++i) {
        const double r = rd(rng);
        v.push_back({center.x + r * std::cos(ang[static_cast<std::size_t>(i)]),
                     center.y + r * std::sin(ang[static_cast<std::size_t>(i)])});
    }
    if (!ccw) std::reverse(v.begin(), v.end());
    return OrientedJordanCurve(v, tol);
}

inline void fill_slots(std::mt19937& rng, Point center, double extent, int depth, bool positive,
                       const GenParams& p, std::vector<OrientedJordanCurve>& out, Tolerance tol) {
    // 2x2 sub-slots inside the disk certainly contained in the parent.
    std::uniform_int_distribution<int> nd(1, p.max_children);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    const int want = nd(rng);
    std::vector<int> slots{0, 1, 2, 3};
    std::shuffle(slots.begin(), slots.end(), rng);
    for (int s = 0; s < want && out.size() < 8; ++s) {
        const int slot = slots[static_cast<std::size_t>(s)];
        const double half = extent / 2.0;
        const Point sc{center.x + (slot % 2 ? half / 2 : -half / 2),
                       center.y + (slot / 2 ? half / 2 : -half / 2)};
        const double rmax = half * 0.42;
        const double rmin = rmax * 0.75;
        out.push_back(star_polygon(rng, sc, rmin, rmax, p.min_verts, p.max_verts, positive, tol));
        if (depth + 1 < p.max_depth && ud(rng) < 0.55 && out.size() < 8)
            fill_slots(rng, sc, rmin * 0.7, depth + 1, !positive, p, out, tol);
    }
}

}  // namespace detail

// A valid spadjor built from strictly disjoint nested star polygons with
// alternating orientations; roots are positive.
inline RealizableSpadjor random_spadjor(std::mt19937& rng, const GenParams& p, Tolerance tol) {
    std::uniform_int_distribution<int> rootd(1, p.max_roots);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<OrientedJordanCurve> curves;
    const int roots = rootd(rng);
    std::vector<int> slots{0, 1, 2, 3, 4, 5, 6, 7, 8};
    std::shuffle(slots.begin(), slots.end(), rng);
    const double span = 1.0 - 2.0 * p.margin;
    const double slot_size = span / 3.0;
    for (int r = 0; r < roots; ++r) {
        const int slot = slots[static_cast<std::size_t>(r)];
        const Point c{p.margin + (slot % 3 + 0.5) * slot_size,
                      p.margin + (slot / 3 + 0.5) * slot_size};
        const double rmax = slot_size * 0.44;
        const double rmin = rmax * 0.75;
        curves.push_back(
            detail::star_polygon(rng, c, rmin, rmax, p.min_verts, p.max_verts, true, tol));
        if (p.max_depth > 1 && ud(rng) < 0.7 && curves.size() < 8)
            detail::fill_slots(rng, c, rmin * 0.7, 1, false, p, curves, tol);
    }
    return RealizableSpadjor::from_curves(std::move(curves), tol);
}

// Random segment soup for sweep stress tests. With `degenerate`, a portion
// of the segments reuse existing endpoints, overlap existing segments
// collinearly, or end exactly on another segment's interior.
inline std::vector<Segment> random_segments(std::mt19937& rng, int n, double len,
                                            bool degenerate) {
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::uniform_real_distribution<double> ad(0.0, 2.0 * std::numbers::pi);
    std::vector<Segment> segs;
    for (int i = 0; i < n; ++i) {
        const Point a{ud(rng), ud(rng)};
        const double t = ad(rng);
        const double l = len * (0.25 + ud(rng));
        segs.push_back({a, {a.x + l * std::cos(t), a.y + l * std::sin(t)}});
    }
    if (degenerate && n >= 4) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        const int extras = std::max(2, n / 5);
        for (int i = 0; i < extras; ++i) {
            const Segment& base = segs[static_cast<std::size_t>(pick(rng))];
            const int mode = i % 3;
            if (mode == 0) {
                // shared endpoint
                const double t = ad(rng);
                const double l = len * (0.25 + ud(rng));
                segs.push_back({base.b, {base.b.x + l * std::cos(t), base.b.y + l * std::sin(t)}});
            } else if (mode == 1) {
                // collinear overlap: sub-segment extended beyond one end
                const Point d = base.dir();
                segs.push_back({base.a + d * 0.5, base.a + d * 1.5});
            } else {
                // endpoint on the interior of an existing segment
                const Point on = base.a + base.dir() * 0.37;
                const double t = ad(rng);
                const double l = len * (0.25 + ud(rng));
                segs.push_back({on, {on.x + l * std::cos(t), on.y + l * std::sin(t)}});
            }
        }
    }
    return segs;
}

inline bool records_equivalent(const std::vector<IncidenceRecord>& a,
                               const std::vector<IncidenceRecord>& b, Tolerance tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!points_equal(a[i].point, b[i].point, tol)) return false;
        if (a[i].incident.size() != b[i].incident.size()) return false;
        for (std::size_t k = 0; k < a[i].incident.size(); ++k) {
            if (a[i].incident[k].curve != b[i].incident[k].curve ||
                a[i].incident[k].edge != b[i].incident[k].edge)
                return false;
        }
        if (a[i].overlap != b[i].overlap) return false;
    }
    return true;
}

}  // namespace fixtures
