#pragma once

// Realizable spadjors: sets of pairwise almost-disjoint oriented Jordan
// curves as the unique boundary representation of regular open regions,
// with the inclusion (Hasse) structure, atom decomposition, point location
// and Betti numbers cached at construction.

#include <optional>
#include <string>

#include "yinset/curve.hpp"
#include "yinset/sweep.hpp"

namespace yinset {

struct HasseDiagram {
    std::vector<int> parent;  // per curve index; -1 at a root

    std::vector<int> children_of(int node) const {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (parent[i] == node) out.push_back(i);
        return out;
    }
};

// Boundary of one connected component: at most one positive curve plus the
// incomparable negative curves it covers. Indices refer to the owning
// spadjor's curve list.
struct AtomSpadjor {
    std::optional<int> positive;
    std::vector<int> negatives;
};

struct BettiNumbers {
    int components = 0;
    std::vector<int> holes_per_component;
};

enum class ViolationKind { NotSimple, ProperIntersection, CurveOverlap, Alternation };

struct Violation {
    ViolationKind kind;
    int curve_a = -1;
    int curve_b = -1;
    Point where{};
    std::string message;
};

class SpadjorValidationError : public std::runtime_error {
public:
    SpadjorValidationError(std::string what, std::vector<Violation> v)
        : std::runtime_error(std::move(what)), violations(std::move(v)) {}
    std::vector<Violation> violations;
};

// ---------------------------------------------------------------------------
// Inclusion and the Hasse diagram.
// ---------------------------------------------------------------------------

namespace detail {

// Bounded complement of a is a strict superset of that of b, decided by one
// interior sample of b; sound because almost-disjoint boundaries never
// cross, and the area comparison rules out the reversed nesting.
inline bool includes_unchecked(const OrientedJordanCurve& a, const OrientedJordanCurve& b,
                               Tolerance tol) {
    if (std::abs(a.area()) <= std::abs(b.area())) return false;
    const OrientedJordanCurve* walls[] = {&a};
    const Point sample = interior_sample_point(b, walls, tol);
    return a.bounded_side_contains(sample);
}

inline HasseDiagram build_hasse_unchecked(std::span<const OrientedJordanCurve> curves,
                                          Tolerance tol) {
    const int n = static_cast<int>(curves.size());
    HasseDiagram h;
    h.parent.assign(static_cast<std::size_t>(n), -1);
    for (int b = 0; b < n; ++b) {
        int best = -1;
        for (int a = 0; a < n; ++a) {
            if (a == b || !includes_unchecked(curves[a], curves[b], tol)) continue;
            if (best == -1 || std::abs(curves[a].area()) < std::abs(curves[best].area()))
                best = a;
        }
        h.parent[static_cast<std::size_t>(b)] = best;
    }
    return h;
}

inline void require_almost_disjoint(const OrientedJordanCurve& a, const OrientedJordanCurve& b,
                                    Tolerance tol) {
    const OrientedJordanCurve pair[] = {a, b};
    for (const IncidenceRecord& rec : find_intersections(pair, tol)) {
        if (!rec.overlap_pairs.empty())
            throw std::invalid_argument("includes: curves overlap along a path");
        std::set<int> ids;
        for (const auto& h : rec.incident) ids.insert(h.curve);
        if (ids.size() == 2 &&
            classify_pair(rec, 0, 1, pair, tol) == IntersectionClass::Proper)
            throw std::invalid_argument("includes: curves intersect properly at " +
                                        point_str(rec.point));
    }
}

}  // namespace detail

inline bool includes(const OrientedJordanCurve& a, const OrientedJordanCurve& b, Tolerance tol) {
    detail::require_almost_disjoint(a, b, tol);
    return detail::includes_unchecked(a, b, tol);
}

inline HasseDiagram build_hasse(std::span<const OrientedJordanCurve> curves, Tolerance tol) {
    for (std::size_t a = 0; a < curves.size(); ++a)
        for (std::size_t b = a + 1; b < curves.size(); ++b)
            detail::require_almost_disjoint(curves[a], curves[b], tol);
    return detail::build_hasse_unchecked(curves, tol);
}

inline HasseDiagram build_hasse(const std::vector<OrientedJordanCurve>& curves, Tolerance tol) {
    return build_hasse(std::span<const OrientedJordanCurve>(curves), tol);
}

// ---------------------------------------------------------------------------
// Validation.
// ---------------------------------------------------------------------------

namespace detail {

// Local passes of one curve through a record point: each pass contributes
// the pair of branch directions pointing away from the point.
inline std::vector<std::vector<Point>> local_passes(const IncidenceRecord& rec, int curve_id,
                                                    const OrientedJordanCurve& curve,
                                                    Tolerance tol) {
    const int n = static_cast<int>(curve.size());
    std::vector<int> edges;
    for (const auto& h : rec.incident)
        if (h.curve == curve_id) edges.push_back(h.edge);
    std::sort(edges.begin(), edges.end());

    std::vector<std::vector<Point>> passes;
    std::vector<bool> used(edges.size(), false);
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (used[k]) continue;
        const int e = edges[k];
        const Segment seg = curve.edge(static_cast<std::size_t>(e));
        const bool at_a = distance(rec.point, seg.a) < tol.eps;
        const bool at_b = distance(rec.point, seg.b) < tol.eps;
        if (at_b) {
            // Pass through the shared vertex with the successor edge.
            const int succ = (e + 1) % n;
            std::vector<Point> dirs{seg.a - seg.b};
            for (std::size_t m = 0; m < edges.size(); ++m) {
                if (!used[m] && edges[m] == succ) {
                    const Segment s2 = curve.edge(static_cast<std::size_t>(succ));
                    dirs.push_back(s2.b - s2.a);
                    used[m] = true;
                    break;
                }
            }
            passes.push_back(std::move(dirs));
            used[k] = true;
        } else if (at_a) {
            // Predecessor edge, if incident, was consumed by the at_b branch
            // above when scanning in edge order, except across the wrap.
            const int pred = (e + n - 1) % n;
            bool pred_incident = false;
            for (std::size_t m = 0; m < edges.size(); ++m)
                if (edges[m] == pred && !used[m]) pred_incident = true;
            if (pred_incident && pred > e) {
                // Wrap pair (edge n-1, edge 0): pair them now.
                for (std::size_t m = 0; m < edges.size(); ++m)
                    if (edges[m] == pred && !used[m]) used[m] = true;
                const Segment sp = curve.edge(static_cast<std::size_t>(pred));
                passes.push_back({sp.a - sp.b, seg.b - seg.a});
                used[k] = true;
            } else if (!pred_incident) {
                passes.push_back({seg.b - seg.a, seg.b - seg.a});
                used[k] = true;
            } else {
                used[k] = true;  // handled as successor of pred
            }
        } else {
            passes.push_back({seg.a - rec.point, seg.b - rec.point});
            used[k] = true;
        }
    }
    return passes;
}

inline IntersectionClass classify_direction_sets(std::span<const Point> da,
                                                 std::span<const Point> db) {
    constexpr double kAngleEps = 1e-9;
    std::vector<double> aa;
    std::vector<double> bb;
    for (const Point& d : da) aa.push_back(std::atan2(d.y, d.x));
    for (const Point& d : db) bb.push_back(std::atan2(d.y, d.x));
    for (double x : aa)
        for (double y : bb) {
            double diff = std::abs(x - y);
            diff = std::min(diff, 2.0 * std::numbers::pi - diff);
            if (diff < kAngleEps) return IntersectionClass::Improper;
        }
    std::sort(aa.begin(), aa.end());
    auto wedge_of = [&](double ang) {
        const auto it = std::upper_bound(aa.begin(), aa.end(), ang);
        return static_cast<std::size_t>(it - aa.begin()) % aa.size();
    };
    const std::size_t w0 = wedge_of(bb[0]);
    for (std::size_t k = 1; k < bb.size(); ++k)
        if (wedge_of(bb[k]) != w0) return IntersectionClass::Proper;
    return IntersectionClass::Improper;
}

}  // namespace detail

// Structural checks for a curve set to be a realizable spadjor:
//   1. every curve is simple (no proper self-intersection, no spikes),
//   2. curves pairwise have no proper intersections and no 1D overlaps,
//   3. the inclusion forest alternates orientation along covering edges and
//      all roots share one orientation.
// Violations are returned as data; an empty list means ok.
inline std::vector<Violation> validate(std::span<const OrientedJordanCurve> curves,
                                       Tolerance tol) {
    std::vector<Violation> out;

    for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
        const auto& curve = curves[static_cast<std::size_t>(c)];
        const std::size_t n = curve.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point d1 = curve.edge(i).dir();
            const Point d2 = curve.edge((i + 1) % n).dir();
            if (std::abs(cross(d1, d2)) <= tol.eps * (norm(d1) + norm(d2)) && dot(d1, d2) < 0.0)
                out.push_back({ViolationKind::NotSimple, c, c, curve.edge((i + 1) % n).a,
                               "curve doubles back on itself"});
        }
    }

    const auto records = find_intersections(curves, tol);
    for (const IncidenceRecord& rec : records) {
        for (auto [ca, cb] : rec.overlap_pairs) {
            if (ca == cb)
                out.push_back({ViolationKind::NotSimple, ca, cb, rec.point,
                               "curve overlaps itself along a path"});
            else
                out.push_back({ViolationKind::CurveOverlap, ca, cb, rec.point,
                               "curves share a one-dimensional path"});
        }
        std::set<int> ids;
        for (const auto& h : rec.incident) ids.insert(h.curve);
        for (int id : ids) {
            const auto passes =
                detail::local_passes(rec, id, curves[static_cast<std::size_t>(id)], tol);
            for (std::size_t a = 0; a < passes.size(); ++a)
                for (std::size_t b = a + 1; b < passes.size(); ++b)
                    if (detail::classify_direction_sets(passes[a], passes[b]) ==
                        IntersectionClass::Proper)
                        out.push_back({ViolationKind::NotSimple, id, id, rec.point,
                                       "curve crosses itself"});
        }
        std::vector<int> v(ids.begin(), ids.end());
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                if (classify_pair(rec, v[a], v[b], curves, tol) == IntersectionClass::Proper)
                    out.push_back({ViolationKind::ProperIntersection, v[a], v[b], rec.point,
                                   "curves intersect properly"});
    }
    if (!out.empty()) return out;

    const HasseDiagram h = detail::build_hasse_unchecked(curves, tol);
    std::optional<Orientation> root_orient;
    for (int i = 0; i < static_cast<int>(curves.size()); ++i) {
        const auto oi = curves[static_cast<std::size_t>(i)].orientation();
        const int p = h.parent[static_cast<std::size_t>(i)];
        if (p == -1) {
            if (!root_orient) root_orient = oi;
            else if (*root_orient != oi)
                out.push_back({ViolationKind::Alternation, i, -1, {},
                               "root curves with mixed orientations"});
        } else if (curves[static_cast<std::size_t>(p)].orientation() == oi) {
            out.push_back({ViolationKind::Alternation, i, p, {},
                           "covering pair with equal orientations"});
        }
    }
    return out;
}

inline std::vector<Violation> validate(const std::vector<OrientedJordanCurve>& curves,
                                       Tolerance tol) {
    return validate(std::span<const OrientedJordanCurve>(curves), tol);
}

// ---------------------------------------------------------------------------
// RealizableSpadjor.
// ---------------------------------------------------------------------------

enum class SpadjorKind { Zero, One, Curves };

class RealizableSpadjor {
public:
    static RealizableSpadjor zero() { return RealizableSpadjor(SpadjorKind::Zero); }
    static RealizableSpadjor one() { return RealizableSpadjor(SpadjorKind::One); }

    // Validates, then caches the Hasse diagram and atom decomposition.
    static RealizableSpadjor from_curves(std::vector<OrientedJordanCurve> curves, Tolerance tol) {
        auto violations = validate(curves, tol);
        if (!violations.empty())
            throw SpadjorValidationError("curve set is not a realizable spadjor",
                                         std::move(violations));
        return assemble(std::move(curves), tol);
    }

    // For outputs of the library's own operations; full validation runs in
    // debug builds only, the alternation check always.
    static RealizableSpadjor from_operation(std::vector<OrientedJordanCurve> curves,
                                            Tolerance tol) {
#ifndef NDEBUG
        return from_curves(std::move(curves), tol);
#else
        return assemble(std::move(curves), tol);
#endif
    }

    SpadjorKind kind() const { return kind_; }
    bool is_zero() const { return kind_ == SpadjorKind::Zero; }
    bool is_one() const { return kind_ == SpadjorKind::One; }
    const std::vector<OrientedJordanCurve>& curves() const { return curves_; }
    const HasseDiagram& hasse() const { return hasse_; }
    const std::vector<AtomSpadjor>& atoms() const { return atoms_; }

    bool unbounded() const {
        if (kind_ == SpadjorKind::One) return true;
        if (kind_ == SpadjorKind::Zero) return false;
        return !atoms_.empty() && !atoms_.back().positive && !atoms_.back().negatives.empty();
    }

private:
    explicit RealizableSpadjor(SpadjorKind k) : kind_(k) {}

    static RealizableSpadjor assemble(std::vector<OrientedJordanCurve> curves, Tolerance tol) {
        if (curves.empty()) return zero();
        RealizableSpadjor j(SpadjorKind::Curves);
        j.curves_ = std::move(curves);
        j.hasse_ = detail::build_hasse_unchecked(j.curves_, tol);
        j.atoms_ = extract(j.curves_, j.hasse_);
        return j;
    }

    // Lemma-style extraction: each positive curve gathers the negative
    // curves it covers (R2A-a, in input order); leftover negatives form the
    // single unbounded atom, appended last (R2A-b).
    static std::vector<AtomSpadjor> extract(const std::vector<OrientedJordanCurve>& curves,
                                            const HasseDiagram& h) {
        const int n = static_cast<int>(curves.size());
        std::vector<bool> consumed(static_cast<std::size_t>(n), false);
        std::vector<AtomSpadjor> atoms;
        for (int i = 0; i < n; ++i) {
            if (curves[static_cast<std::size_t>(i)].orientation() != Orientation::Positive)
                continue;
            AtomSpadjor atom;
            atom.positive = i;
            consumed[static_cast<std::size_t>(i)] = true;
            for (int c : h.children_of(i)) {
                if (curves[static_cast<std::size_t>(c)].orientation() != Orientation::Negative)
                    throw SpadjorValidationError(
                        "not realizable: positive curve covers a positive curve",
                        {{ViolationKind::Alternation, c, i, {}, "covering pair"}});
                atom.negatives.push_back(c);
                consumed[static_cast<std::size_t>(c)] = true;
            }
            atoms.push_back(std::move(atom));
        }
        AtomSpadjor rest;
        for (int i = 0; i < n; ++i)
            if (!consumed[static_cast<std::size_t>(i)]) rest.negatives.push_back(i);
        if (!rest.negatives.empty()) atoms.push_back(std::move(rest));
        return atoms;
    }

    SpadjorKind kind_;
    std::vector<OrientedJordanCurve> curves_;
    HasseDiagram hasse_;
    std::vector<AtomSpadjor> atoms_;
};

inline std::vector<AtomSpadjor> extract_atoms(const RealizableSpadjor& j) {
    if (j.kind() != SpadjorKind::Curves)
        throw std::invalid_argument("extract_atoms: spadjor has no curves");
    return j.atoms();
}

// Point location realizing the boundary-to-interior map: the point is in
// the region iff it lies in the interior of every curve of some atom.
inline PointLocation locate(const RealizableSpadjor& j, Point p, Tolerance tol) {
    if (j.is_zero()) return PointLocation::Exterior;
    if (j.is_one()) return PointLocation::Interior;
    for (const auto& c : j.curves())
        if (c.bbox().contains(p, tol.eps) && c.min_distance(p) < tol.eps)
            return PointLocation::Boundary;
    for (const AtomSpadjor& atom : j.atoms()) {
        bool inside = true;
        if (atom.positive) {
            const auto& c = j.curves()[static_cast<std::size_t>(*atom.positive)];
            inside = c.bounded_side_contains(p);
        }
        for (int neg : atom.negatives) {
            if (!inside) break;
            const auto& c = j.curves()[static_cast<std::size_t>(neg)];
            inside = !c.bounded_side_contains(p);
        }
        if (inside) return PointLocation::Interior;
    }
    return PointLocation::Exterior;
}

// O(1) with respect to vertex count: a read of the cached atom structure.
inline BettiNumbers betti(const RealizableSpadjor& j) {
    BettiNumbers b;
    if (j.is_zero()) return b;
    if (j.is_one()) {
        b.components = 1;
        b.holes_per_component = {0};
        return b;
    }
    b.components = static_cast<int>(j.atoms().size());
    for (const AtomSpadjor& atom : j.atoms())
        b.holes_per_component.push_back(static_cast<int>(atom.negatives.size()));
    return b;
}

}  // namespace yinset
