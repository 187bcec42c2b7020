#pragma once

// The Boolean algebra on realizable spadjors. Curves are cut into oriented
// paths at intersection points, path subsets are selected by region-side
// tests, and the pasting map reassembles the unique boundary representation
// by always leaving a junction along the out-path that makes the smallest
// positive counterclockwise angle with the reversed arrival direction.

#include <map>

#include "yinset/spadjor.hpp"

namespace yinset {

// Open oriented polyline between two junction vertices, or a closed
// self-loop touching no junction at all.
struct OrientedPath {
    int from = -1;
    int to = -1;
    std::vector<Point> points;  // open: includes both junction coordinates

    bool is_loop() const { return from < 0; }
};

struct SegmentedSpadjor {
    std::vector<Point> vertices;
    std::vector<OrientedPath> paths;
};

// ---------------------------------------------------------------------------
// Cutting.
// ---------------------------------------------------------------------------

namespace detail {

struct CutPosition {
    int edge;
    double t;
    int vertex;  // junction id
    double pos() const { return edge + t; }
};

// All positions along the curve lying within eps of any junction point.
// Multiple raw candidates for one geometric crossing (the two edges at a
// polyline vertex both report it) are merged.
inline std::vector<CutPosition> cut_positions(const OrientedJordanCurve& curve,
                                              std::span<const Point> junctions, Tolerance tol) {
    std::vector<CutPosition> raw;
    const int n = static_cast<int>(curve.size());
    for (int v = 0; v < static_cast<int>(junctions.size()); ++v) {
        const Point p = junctions[v];
        if (!curve.bbox().contains(p, tol.eps)) continue;
        for (int e = 0; e < n; ++e) {
            const Segment seg = curve.edge(static_cast<std::size_t>(e));
            if (point_segment_distance(p, seg) < tol.eps)
                raw.push_back({e, segment_param(p, seg), v, });
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const CutPosition& a, const CutPosition& b) { return a.pos() < b.pos(); });

    auto point_at = [&](const CutPosition& c) {
        const Segment seg = curve.edge(static_cast<std::size_t>(c.edge));
        return seg.a + seg.dir() * c.t;
    };
    std::vector<CutPosition> merged;
    for (const CutPosition& c : raw) {
        if (!merged.empty() && merged.back().vertex == c.vertex &&
            distance(point_at(merged.back()), point_at(c)) < 2.0 * tol.eps)
            continue;
        merged.push_back(c);
    }
    if (merged.size() >= 2 && merged.front().vertex == merged.back().vertex &&
        distance(point_at(merged.front()), point_at(merged.back())) < 2.0 * tol.eps)
        merged.pop_back();
    return merged;
}

// Splits one curve at the given junctions; no junction nearby yields a
// single self-loop. Path endpoints take the exact junction coordinates so
// the downstream multigraph connects exactly.
inline void cut_curve(const OrientedJordanCurve& curve, std::span<const Point> junctions,
                      Tolerance tol, std::vector<OrientedPath>& out) {
    const auto cuts = cut_positions(curve, junctions, tol);
    const int n = static_cast<int>(curve.size());
    if (cuts.empty()) {
        out.push_back({-1, -1, curve.vertices()});
        return;
    }
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        const CutPosition& a = cuts[k];
        const CutPosition& b = cuts[(k + 1) % cuts.size()];
        OrientedPath path;
        path.from = a.vertex;
        path.to = b.vertex;
        path.points.push_back(junctions[static_cast<std::size_t>(a.vertex)]);
        // Curve vertices strictly between the two cut parameters, skipping
        // any that coincide with a junction.
        const double pa = a.pos();
        const double pb = b.pos() + (cuts.size() == 1 || b.pos() <= pa ? n : 0);
        for (int step = a.edge + 1;; ++step) {
            const double vp = step;
            if (vp >= pb) break;
            if (vp <= pa) continue;
            const Point q = curve.vertices()[static_cast<std::size_t>(step % n)];
            if (distance(q, path.points.front()) < tol.eps) continue;
            if (distance(q, junctions[static_cast<std::size_t>(b.vertex)]) < tol.eps) continue;
            path.points.push_back(q);
        }
        path.points.push_back(junctions[static_cast<std::size_t>(b.vertex)]);
        out.push_back(std::move(path));
    }
}

inline SegmentedSpadjor cut_impl(const std::vector<OrientedJordanCurve>& curves,
                                 std::vector<Point> junctions, Tolerance tol) {
    SegmentedSpadjor e;
    e.vertices = std::move(junctions);
    for (const auto& c : curves) cut_curve(c, e.vertices, tol, e.paths);
    return e;
}

}  // namespace detail

// Cutting map: divides each curve of j at the given points (eps-snapped to
// the polylines). Points farther than eps from every curve are rejected.
inline SegmentedSpadjor cut(const RealizableSpadjor& j, std::span<const Point> v, Tolerance tol) {
    if (j.kind() != SpadjorKind::Curves)
        throw std::invalid_argument("cut: spadjor has no curves");
    std::vector<Point> reps = cluster_points(v, tol).representatives;
    for (const Point& p : reps) {
        bool on_some = false;
        for (const auto& c : j.curves()) {
            if (c.bbox().contains(p, tol.eps) && c.min_distance(p) < tol.eps) {
                on_some = true;
                break;
            }
        }
        if (!on_some)
            throw std::invalid_argument("cut: point " + point_str(p) +
                                        " lies on no curve of the spadjor");
    }
    return detail::cut_impl(j.curves(), std::move(reps), tol);
}

inline SegmentedSpadjor cut(const RealizableSpadjor& j, const std::vector<Point>& v,
                            Tolerance tol) {
    return cut(j, std::span<const Point>(v), tol);
}

// ---------------------------------------------------------------------------
// Pasting.
// ---------------------------------------------------------------------------

namespace detail {

inline Point departure_dir(const OrientedPath& p) { return p.points[1] - p.points[0]; }

inline Point reversed_arrival_dir(const OrientedPath& p) {
    const std::size_t n = p.points.size();
    return p.points[n - 2] - p.points[n - 1];
}

}  // namespace detail

// Pasting map (the inverse of cut): self-loops pass through unchanged; open
// paths are grown into loops by the smallest-positive-angle rule; loops that
// revisit a junction are divided there into separate Jordan curves.
inline RealizableSpadjor paste(const SegmentedSpadjor& e, Tolerance tol) {
    std::vector<int> indeg(e.vertices.size(), 0);
    std::vector<int> outdeg(e.vertices.size(), 0);
    std::vector<std::vector<int>> outs(e.vertices.size());
    for (int i = 0; i < static_cast<int>(e.paths.size()); ++i) {
        const OrientedPath& p = e.paths[static_cast<std::size_t>(i)];
        if (p.is_loop()) continue;
        ++outdeg[static_cast<std::size_t>(p.from)];
        ++indeg[static_cast<std::size_t>(p.to)];
        outs[static_cast<std::size_t>(p.from)].push_back(i);
    }
    for (std::size_t v = 0; v < e.vertices.size(); ++v)
        if (indeg[v] != outdeg[v])
            throw std::invalid_argument("paste: in-degree differs from out-degree at vertex " +
                                        point_str(e.vertices[v]));

    std::vector<OrientedJordanCurve> curves;
    std::vector<bool> used(e.paths.size(), false);

    for (std::size_t i = 0; i < e.paths.size(); ++i) {
        if (e.paths[i].is_loop()) {
            curves.emplace_back(e.paths[i].points, tol);
            used[i] = true;
        }
    }

    constexpr double kAngleEps = 1e-9;
    for (std::size_t seed = 0; seed < e.paths.size(); ++seed) {
        if (used[seed]) continue;
        std::vector<int> walk{static_cast<int>(seed)};
        used[seed] = true;
        const int start = e.paths[seed].from;
        int at = e.paths[seed].to;
        Point rev_in = detail::reversed_arrival_dir(e.paths[seed]);
        while (at != start) {
            int best = -1;
            double best_angle = 0.0;
            for (int cand : outs[static_cast<std::size_t>(at)]) {
                if (used[static_cast<std::size_t>(cand)]) continue;
                const OrientedPath& cp = e.paths[static_cast<std::size_t>(cand)];
                const double ang = ccw_angle(detail::departure_dir(cp), rev_in);
                if (best == -1) {
                    best = cand;
                    best_angle = ang;
                    continue;
                }
                if (ang < best_angle - kAngleEps) {
                    best = cand;
                    best_angle = ang;
                } else if (ang < best_angle + kAngleEps) {
                    const OrientedPath& bp = e.paths[static_cast<std::size_t>(best)];
                    const double lc = norm(detail::departure_dir(cp));
                    const double lb = norm(detail::departure_dir(bp));
                    if (lc < lb - tol.eps ||
                        (std::abs(lc - lb) <= tol.eps && lex_less(cp.points[1], bp.points[1]))) {
                        best = cand;
                        best_angle = ang;
                    }
                }
            }
            if (best == -1)
                throw std::invalid_argument("paste: stuck at vertex " +
                                            point_str(e.vertices[static_cast<std::size_t>(at)]));
            used[static_cast<std::size_t>(best)] = true;
            walk.push_back(best);
            rev_in = detail::reversed_arrival_dir(e.paths[static_cast<std::size_t>(best)]);
            at = e.paths[static_cast<std::size_t>(best)].to;
        }

        // Divide the closed walk into simple junction cycles.
        std::vector<int> stack;
        std::map<int, std::size_t> depth;
        depth[start] = 0;
        auto emit = [&](std::span<const int> cycle) {
            std::vector<Point> ring;
            for (int pid : cycle) {
                const OrientedPath& p = e.paths[static_cast<std::size_t>(pid)];
                ring.insert(ring.end(), p.points.begin(), p.points.end() - 1);
            }
            curves.emplace_back(std::move(ring), tol);
        };
        for (int pid : walk) {
            stack.push_back(pid);
            const int w = e.paths[static_cast<std::size_t>(pid)].to;
            const auto it = depth.find(w);
            if (it != depth.end()) {
                const std::size_t base = it->second;
                emit(std::span<const int>(stack).subspan(base));
                for (std::size_t k = base; k < stack.size(); ++k) {
                    const int u = e.paths[static_cast<std::size_t>(stack[k])].to;
                    if (u != w) depth.erase(u);
                }
                stack.resize(base);
            } else {
                depth[w] = stack.size();
            }
        }
    }

    if (curves.empty()) return RealizableSpadjor::zero();
    return RealizableSpadjor::from_operation(std::move(curves), tol);
}

// ---------------------------------------------------------------------------
// Complementation.
// ---------------------------------------------------------------------------

namespace detail {

inline OrientedPath reverse_path(const OrientedPath& p) {
    OrientedPath r;
    r.from = p.to;
    r.to = p.from;
    r.points.assign(p.points.rbegin(), p.points.rend());
    return r;
}

// Intersection points among the curves of one valid spadjor; these are its
// improper intersections (a valid spadjor has no proper ones).
inline std::vector<Point> improper_intersection_points(const RealizableSpadjor& j,
                                                       Tolerance tol) {
    std::vector<Point> v;
    for (const IncidenceRecord& rec : find_intersections(j.curves(), tol)) v.push_back(rec.point);
    return v;
}

}  // namespace detail

inline std::vector<Point> improper_intersections(const RealizableSpadjor& j, Tolerance tol) {
    if (j.kind() != SpadjorKind::Curves) return {};
    return detail::improper_intersection_points(j, tol);
}

// Complement: cut at the improper intersections, reverse the orientation of
// every path, paste. Reversal alone is not enough; paths regroup into
// different Jordan curves wherever curves touch.
inline RealizableSpadjor complement(const RealizableSpadjor& j, Tolerance tol) {
    if (j.is_zero()) return RealizableSpadjor::one();
    if (j.is_one()) return RealizableSpadjor::zero();
    SegmentedSpadjor e =
        detail::cut_impl(j.curves(), detail::improper_intersection_points(j, tol), tol);
    for (OrientedPath& p : e.paths) p = detail::reverse_path(p);
    return paste(e, tol);
}

// ---------------------------------------------------------------------------
// Meet.
// ---------------------------------------------------------------------------

namespace detail {

inline Point path_sample(const OrientedPath& p, std::size_t seg_index) {
    const Segment s{p.points[seg_index], p.points[seg_index + 1]};
    return s.a + s.dir() * 0.5;
}

inline Point path_midpoint(const OrientedPath& p) {
    return path_sample(p, (p.points.size() - 1) / 2);
}

inline double path_distance(const OrientedPath& p, Point q) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t segs = p.points.size() - (p.is_loop() ? 0 : 1);
    for (std::size_t i = 0; i < segs; ++i) {
        const Segment s{p.points[i], p.points[(i + 1) % p.points.size()]};
        best = std::min(best, point_segment_distance(q, s));
    }
    return best;
}

inline Point path_tangent_at(const OrientedPath& p, Point q) {
    double best = std::numeric_limits<double>::infinity();
    Point dir{1.0, 0.0};
    const std::size_t segs = p.points.size() - (p.is_loop() ? 0 : 1);
    for (std::size_t i = 0; i < segs; ++i) {
        const Segment s{p.points[i], p.points[(i + 1) % p.points.size()]};
        const double d = point_segment_distance(q, s);
        if (d < best) {
            best = d;
            dir = s.dir();
        }
    }
    return dir;
}

enum class SharedKind { NotShared, SameDirection, OppositeDirection };

// Does path a trace the same ground set as path b? Both were cut at the
// same junction set, so agreement at one interior sample implies agreement
// everywhere; the induced directions are compared through the local
// tangent.
inline SharedKind shared_with(const OrientedPath& a, const OrientedPath& b, Tolerance tol) {
    const bool endpoints_forward = !a.is_loop() && !b.is_loop() && a.from == b.from && a.to == b.to;
    const bool endpoints_reverse = !a.is_loop() && !b.is_loop() && a.from == b.to && a.to == b.from;
    const bool both_loops = a.is_loop() && b.is_loop();
    if (!endpoints_forward && !endpoints_reverse && !both_loops) return SharedKind::NotShared;
    const Point ma = path_midpoint(a);
    if (path_distance(b, ma) >= tol.eps) return SharedKind::NotShared;
    const Point mb = path_midpoint(b);
    if (path_distance(a, mb) >= tol.eps) return SharedKind::NotShared;
    const Point ta = path_tangent_at(a, ma);
    const Point tb = path_tangent_at(b, ma);
    return dot(ta, tb) > 0.0 ? SharedKind::SameDirection : SharedKind::OppositeDirection;
}

// Location of the path interior relative to a spadjor, decided at the
// middle-segment midpoint; extra samples are consulted only if that point
// sits on the boundary band.
inline PointLocation path_interior_location(const OrientedPath& p, const RealizableSpadjor& s,
                                            Tolerance tol) {
    const PointLocation first = locate(s, path_midpoint(p), tol);
    if (first != PointLocation::Boundary) return first;
    const std::size_t segs = p.points.size() - (p.is_loop() ? 0 : 1);
    for (std::size_t i = 0; i < segs; ++i) {
        const PointLocation l = locate(s, path_sample(p, i % (p.points.size() - 1)), tol);
        if (l != PointLocation::Boundary) return l;
    }
    return PointLocation::Boundary;
}

}  // namespace detail

// Meet: the boundary of the intersection is assembled from j-paths lying in
// the region of k (or coinciding with a k-path in the same direction) and
// k-paths lying strictly in the region of j, then pasted.
inline RealizableSpadjor meet(const RealizableSpadjor& j, const RealizableSpadjor& k,
                              Tolerance tol) {
    if (j.is_zero() || k.is_zero()) return RealizableSpadjor::zero();
    if (k.is_one()) return j;
    if (j.is_one()) return k;

    std::vector<OrientedJordanCurve> combined = j.curves();
    combined.insert(combined.end(), k.curves().begin(), k.curves().end());
    const int split = static_cast<int>(j.curves().size());

    // Junctions: endpoints of shared paths and isolated points of the
    // cross intersection of the two boundaries.
    std::vector<Point> junctions;
    for (const IncidenceRecord& rec : find_intersections(combined, tol)) {
        bool has_j = false;
        bool has_k = false;
        for (const auto& h : rec.incident) (h.curve < split ? has_j : has_k) = true;
        if (has_j && has_k) junctions.push_back(rec.point);
    }

    const SegmentedSpadjor ej = detail::cut_impl(j.curves(), junctions, tol);
    const SegmentedSpadjor ek = detail::cut_impl(k.curves(), junctions, tol);

    SegmentedSpadjor e;
    e.vertices = ej.vertices;
    std::vector<bool> k_shared(ek.paths.size(), false);
    for (const OrientedPath& pj : ej.paths) {
        detail::SharedKind shared = detail::SharedKind::NotShared;
        for (std::size_t kk = 0; kk < ek.paths.size(); ++kk) {
            const auto s = detail::shared_with(pj, ek.paths[kk], tol);
            if (s != detail::SharedKind::NotShared) {
                shared = s;
                k_shared[kk] = true;
                break;
            }
        }
        if (shared == detail::SharedKind::SameDirection) {
            e.paths.push_back(pj);
        } else if (shared == detail::SharedKind::NotShared &&
                   detail::path_interior_location(pj, k, tol) == PointLocation::Interior) {
            e.paths.push_back(pj);
        }
        // Opposite induced directions: the path borders the two regions from
        // opposite sides and belongs to neither boundary of the meet.
    }
    for (std::size_t kk = 0; kk < ek.paths.size(); ++kk) {
        if (k_shared[kk]) continue;
        if (detail::path_interior_location(ek.paths[kk], j, tol) == PointLocation::Interior)
            e.paths.push_back(ek.paths[kk]);
    }
    return paste(e, tol);
}

inline RealizableSpadjor join(const RealizableSpadjor& j, const RealizableSpadjor& k,
                              Tolerance tol) {
    return complement(meet(complement(j, tol), complement(k, tol), tol), tol);
}

inline RealizableSpadjor difference(const RealizableSpadjor& j, const RealizableSpadjor& k,
                                    Tolerance tol) {
    return meet(j, complement(k, tol), tol);
}

inline RealizableSpadjor symmetric_difference(const RealizableSpadjor& j,
                                              const RealizableSpadjor& k, Tolerance tol) {
    return join(difference(j, k, tol), difference(k, j, tol), tol);
}

// ---------------------------------------------------------------------------
// Canonical form and equality.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Point> canonical_vertices(const OrientedJordanCurve& c, Tolerance tol) {
    std::vector<Point> v = c.vertices();
    // Drop interior vertices that are eps-collinear with their neighbors.
    bool changed = true;
    while (changed && v.size() > 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size() && v.size() > 3; ++i) {
            const Point& u = v[(i + v.size() - 1) % v.size()];
            const Point& w = v[(i + 1) % v.size()];
            if (point_segment_distance(v[i], {u, w}) < tol.eps) {
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    // Rotate to the lexicographically smallest full sequence.
    std::size_t best = 0;
    for (std::size_t s = 1; s < v.size(); ++s) {
        for (std::size_t k = 0; k < v.size(); ++k) {
            const Point& a = v[(s + k) % v.size()];
            const Point& b = v[(best + k) % v.size()];
            if (a == b) continue;
            if (lex_less(a, b)) best = s;
            break;
        }
    }
    std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
    return v;
}

inline bool lex_less_points(const std::vector<Point>& a, const std::vector<Point>& b) {
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] == b[i]) continue;
        return lex_less(a[i], b[i]);
    }
    return a.size() < b.size();
}

}  // namespace detail

// Canonical vertex lists of all curves, sorted; the normal form behind
// equality and serialization.
inline std::vector<std::vector<Point>> canonical_curves(const RealizableSpadjor& j,
                                                        Tolerance tol) {
    std::vector<std::vector<Point>> out;
    for (const auto& c : j.curves()) out.push_back(detail::canonical_vertices(c, tol));
    std::sort(out.begin(), out.end(), detail::lex_less_points);
    return out;
}

inline bool equal_canonical(const RealizableSpadjor& j, const RealizableSpadjor& k,
                            Tolerance tol) {
    if (j.kind() != k.kind()) return false;
    if (j.kind() != SpadjorKind::Curves) return true;
    const auto cj = canonical_curves(j, tol);
    const auto ck = canonical_curves(k, tol);
    if (cj.size() != ck.size()) return false;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        if (cj[i].size() != ck[i].size()) return false;
        for (std::size_t p = 0; p < cj[i].size(); ++p)
            if (!points_equal(cj[i][p], ck[i][p], tol)) return false;
    }
    return true;
}

}  // namespace yinset
