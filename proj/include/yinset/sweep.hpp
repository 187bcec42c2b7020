#pragma once

// Epsilon-tolerant plane sweep over curve edges, plus the shared machinery
// that turns raw pairwise hits into clustered incidence records and
// classifies intersection points as proper (transversal) or improper
// (touching).

#include <cstdint>
#include <map>
#include <set>
#include <unordered_set>

#include "yinset/curve.hpp"
#include "yinset/geom.hpp"

namespace yinset {

struct EdgeRef {
    int curve = -1;
    int edge = 0;
};

// A set of directed segments remembering which curve edge each came from.
// Free-standing segments are modeled as one-edge curves so that the
// adjacency rule (consecutive edges of one polyline share a vertex by
// construction, which is not an intersection) applies uniformly.
struct SegmentSoup {
    std::vector<Segment> segments;
    std::vector<EdgeRef> owners;
    std::vector<int> curve_edge_count;

    static SegmentSoup from_curves(std::span<const OrientedJordanCurve> curves) {
        SegmentSoup s;
        for (int c = 0; c < static_cast<int>(curves.size()); ++c) {
            const auto& curve = curves[c];
            s.curve_edge_count.push_back(static_cast<int>(curve.size()));
            for (int e = 0; e < static_cast<int>(curve.size()); ++e) {
                s.segments.push_back(curve.edge(static_cast<std::size_t>(e)));
                s.owners.push_back({c, e});
            }
        }
        return s;
    }

    static SegmentSoup from_segments(std::span<const Segment> segs) {
        SegmentSoup s;
        for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
            s.segments.push_back(segs[i]);
            s.owners.push_back({i, 0});
            s.curve_edge_count.push_back(1);
        }
        return s;
    }

    bool adjacent_in_curve(int i, int j) const {
        const EdgeRef a = owners[i];
        const EdgeRef b = owners[j];
        if (a.curve != b.curve) return false;
        const int n = curve_edge_count[a.curve];
        if (n <= 2) return true;  // two edges of a 2-gon are both adjacent; n>=3 in practice
        const int d = std::abs(a.edge - b.edge);
        return d == 1 || d == n - 1;
    }

    // Pairs worth reporting: edges of two distinct curves, or non-adjacent
    // edges of one curve (a self-touch).
    bool qualifying_pair(int i, int j) const {
        if (i == j) return false;
        return !adjacent_in_curve(i, j);
    }
};

struct PairHit {
    int i = 0;
    int j = 0;
    IntersectionResult result;
};

struct IncidenceRecord {
    struct Hit {
        int curve = -1;
        int edge = 0;
        double param = 0.0;  // parameter in [0,1] along the directed edge
    };
    Point point{};
    std::vector<Hit> incident;
    bool overlap = false;                           // point bounds a collinear overlap
    std::vector<std::pair<int, int>> overlap_pairs;  // curve ids of overlapping edges
};

enum class IntersectionClass { Proper, Improper };

// ---------------------------------------------------------------------------
// Record building (shared between the sweep and the brute-force oracle).
// ---------------------------------------------------------------------------

inline std::vector<IncidenceRecord> build_incidence_records(const SegmentSoup& soup,
                                                            std::span<const PairHit> hits,
                                                            Tolerance tol) {
    struct Candidate {
        Point p;
        int seg_a;
        int seg_b;
        bool overlap;
    };
    std::vector<Candidate> cands;
    for (const PairHit& h : hits) {
        if (h.result.kind == IntersectionKind::AtPoint) {
            cands.push_back({h.result.point, h.i, h.j, false});
        } else if (h.result.kind == IntersectionKind::CollinearOverlap) {
            cands.push_back({h.result.overlap.a, h.i, h.j, true});
            cands.push_back({h.result.overlap.b, h.i, h.j, true});
        }
    }
    if (cands.empty()) return {};

    std::vector<Point> pts;
    pts.reserve(cands.size());
    for (const Candidate& c : cands) pts.push_back(c.p);
    const Clustering cl = cluster_points(pts, tol);

    struct Group {
        std::set<int> segs;
        bool overlap = false;
        std::set<std::pair<int, int>> overlap_pairs;
    };
    std::vector<Group> groups(cl.representatives.size());
    for (std::size_t k = 0; k < cands.size(); ++k) {
        Group& g = groups[cl.assignment[k]];
        g.segs.insert(cands[k].seg_a);
        g.segs.insert(cands[k].seg_b);
        if (cands[k].overlap) {
            g.overlap = true;
            int ca = soup.owners[cands[k].seg_a].curve;
            int cb = soup.owners[cands[k].seg_b].curve;
            if (ca > cb) std::swap(ca, cb);
            g.overlap_pairs.insert({ca, cb});
        }
    }

    std::vector<IncidenceRecord> records;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const Point rep = cl.representatives[g];
        // Complete the incident set across shared polyline vertices: if a
        // contributing edge meets rep at one of its endpoints, the curve
        // neighbor sharing that endpoint is incident too.
        std::set<int> segs = groups[g].segs;
        for (int s : groups[g].segs) {
            const EdgeRef ref = soup.owners[s];
            const int n = soup.curve_edge_count[ref.curve];
            if (n <= 1) continue;
            const Segment& seg = soup.segments[s];
            const int base = s - ref.edge;
            if (distance(rep, seg.a) < tol.eps) segs.insert(base + (ref.edge + n - 1) % n);
            if (distance(rep, seg.b) < tol.eps) segs.insert(base + (ref.edge + 1) % n);
        }

        IncidenceRecord rec;
        rec.point = rep;
        rec.overlap = groups[g].overlap;
        rec.overlap_pairs.assign(groups[g].overlap_pairs.begin(), groups[g].overlap_pairs.end());
        bool qualifying = false;
        std::vector<int> kept;
        for (int s : segs) {
            if (point_segment_distance(rep, soup.segments[s]) >= tol.eps) continue;
            kept.push_back(s);
        }
        for (std::size_t a = 0; a < kept.size() && !qualifying; ++a)
            for (std::size_t b = a + 1; b < kept.size() && !qualifying; ++b)
                qualifying = soup.qualifying_pair(kept[a], kept[b]);
        if (!qualifying || kept.size() < 2) continue;
        for (int s : kept) {
            const EdgeRef ref = soup.owners[s];
            rec.incident.push_back({ref.curve, ref.edge, segment_param(rep, soup.segments[s])});
        }
        std::sort(rec.incident.begin(), rec.incident.end(), [](const auto& a, const auto& b) {
            return a.curve < b.curve || (a.curve == b.curve && a.edge < b.edge);
        });
        records.push_back(std::move(rec));
    }
    std::sort(records.begin(), records.end(),
              [](const IncidenceRecord& a, const IncidenceRecord& b) {
                  return lex_less(a.point, b.point);
              });
    return records;
}

// ---------------------------------------------------------------------------
// The modified Bentley-Ottmann sweep.
// ---------------------------------------------------------------------------

namespace detail {

class Sweep {
public:
    Sweep(const SegmentSoup& soup, Tolerance tol) : soup_(soup), tol_(tol), status_(Cmp{this}) {}

    // Exercised by stress harnesses: verify status invariants at every event.
    static inline bool self_check = false;
    static inline bool trace = false;
    static inline int trace_a = -1;
    static inline int trace_b = -1;

    std::vector<PairHit> run() {
        prepare();
        while (!events_.empty()) {
            const auto it = events_.begin();
            const Point p = it->first;
            const std::vector<int> starts = it->second;
            events_.erase(it);
            process(p, starts);
            if (self_check) verify(p);
        }
        finish_collapsed();
        return std::move(hits_);
    }

private:
    struct Cmp {
        Sweep* s;
        bool operator()(int a, int b) const {
            if (a == b) return false;
            // The probe sentinel compares as a horizontal ray at probe_y_,
            // ordered below any segment with the same height.
            if (a == kProbeLo || b == kProbeLo) {
                const double ya = a == kProbeLo ? s->probe_y_ : s->y_at(a, s->x_);
                const double yb = b == kProbeLo ? s->probe_y_ : s->y_at(b, s->x_);
                return a == kProbeLo ? ya <= yb : ya < yb;
            }
            const double ya = s->y_at(a, s->x_);
            const double yb = s->y_at(b, s->x_);
            const double sa = s->slope(a);
            const double sb = s->slope(b);
            // Ordinates within interpolation rounding of each other mean
            // both segments run through the current event point; ordering by
            // slope there gives the just-after-the-point order, so a
            // crossing pair reinserted at its crossing lands in
            // post-crossing order even when the interpolated ordinates
            // differ in the last bits. The rounding of y_at scales with the
            // slope, hence so must the tie band.
            const double tie = kTieRel * (1.0 + std::abs(sa) + std::abs(sb));
            if (std::abs(ya - yb) > tie) return ya < yb;
            if (sa != sb) return sa < sb;
            return a < b;
        }
    };

    static constexpr double kTieRel = 1e-12;

    void prepare() {
        const std::size_t n = soup_.segments.size();
        left_.resize(n);
        right_.resize(n);
        std::vector<Point> ends;
        ends.reserve(2 * n);
        for (const Segment& s : soup_.segments) {
            ends.push_back(s.a);
            ends.push_back(s.b);
        }
        const Clustering cl = cluster_points(ends, tol_);
        for (std::size_t i = 0; i < n; ++i) {
            Point a = cl.representatives[cl.assignment[2 * i]];
            Point b = cl.representatives[cl.assignment[2 * i + 1]];
            if (lex_less(b, a)) std::swap(a, b);
            left_[i] = a;
            right_[i] = b;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (left_[i] == right_[i]) {
                collapsed_.push_back(static_cast<int>(i));
                continue;
            }
            events_[left_[i]].push_back(static_cast<int>(i));
            events_[right_[i]];
        }
    }

    // Segments whose endpoints merged under eps cannot be ordered by the
    // sweep; the rare stragglers are paired exhaustively instead.
    void finish_collapsed() {
        for (int c : collapsed_)
            for (int j = 0; j < static_cast<int>(soup_.segments.size()); ++j)
                if (j != c) test_pair(c, j, {-std::numeric_limits<double>::infinity(), 0.0});
    }

    bool vertical(int i) const { return left_[i].x == right_[i].x; }

    double y_at(int i, double x) const {
        const Point l = left_[i];
        const Point r = right_[i];
        if (l.x == r.x) return l.y;
        const double t = std::clamp((x - l.x) / (r.x - l.x), 0.0, 1.0);
        return l.y + t * (r.y - l.y);
    }

    double slope(int i) const {
        const Point l = left_[i];
        const Point r = right_[i];
        if (l.x == r.x) return std::numeric_limits<double>::infinity();
        return (r.y - l.y) / (r.x - l.x);
    }

    static std::uint64_t pair_key(int i, int j) {
        if (i > j) std::swap(i, j);
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) |
               static_cast<std::uint32_t>(j);
    }

    // Tests a pair once, records a qualifying hit, and schedules the sweep
    // reordering event for genuine crossings ahead of the current point.
    void test_pair(int i, int j, Point current) {
        if (i == j) return;
        if (!tested_.insert(pair_key(i, j)).second) return;
        const IntersectionResult r = segment_intersect(soup_.segments[i], soup_.segments[j], tol_);
        if (trace && traced(i) && traced(j))
            printf("  test (%d,%d) kind %d at event (%.17g, %.17g)\n", i, j,
                   static_cast<int>(r.kind), current.x, current.y);
        if (r.kind == IntersectionKind::None) return;
        if (soup_.qualifying_pair(i, j)) hits_.push_back({i, j, r});
        if (r.kind == IntersectionKind::AtPoint) {
            schedule(r.point, current);
            // If snapping displaced the event, make sure the raw crossing
            // column still gets a reordering pass.
            const Segment& a = soup_.segments[i];
            const Segment& b = soup_.segments[j];
            const double denom = cross(a.dir(), b.dir());
            if (denom != 0.0) {
                const double t = cross(b.a - a.a, b.dir()) / denom;
                if (t >= 0.0 && t <= 1.0) {
                    const Point raw = a.a + a.dir() * t;
                    if (!(raw == r.point)) schedule(raw, current);
                }
            }
        } else {
            schedule(r.overlap.a, current);
            schedule(r.overlap.b, current);
            overlap_chain(i, j, current);
        }
    }

    void schedule(Point q, Point current) {
        if (lex_less(current, q)) events_[q];
    }

    // Stacked collinear groups: adjacency alone pairs only neighbors, so
    // walk outward from a discovered overlap partner.
    void overlap_chain(int i, int j, Point current) {
        for (int anchor : {i, j}) {
            const int other = anchor == i ? j : i;
            if (vertical(other) || !status_.count(other)) continue;
            auto it = status_.find(other);
            auto fwd = it;
            ++fwd;
            while (fwd != status_.end()) {
                const int k = *fwd;
                const IntersectionResult r =
                    segment_intersect(soup_.segments[anchor], soup_.segments[k], tol_);
                if (r.kind != IntersectionKind::CollinearOverlap) break;
                test_pair(anchor, k, current);
                ++fwd;
            }
            if (it != status_.begin()) {
                auto back = it;
                do {
                    --back;
                    const int k = *back;
                    const IntersectionResult r =
                        segment_intersect(soup_.segments[anchor], soup_.segments[k], tol_);
                    if (r.kind != IntersectionKind::CollinearOverlap) break;
                    test_pair(anchor, k, current);
                } while (back != status_.begin());
            }
        }
    }

    bool traced(int s) const { return s == trace_a || s == trace_b; }

    void process(Point p, const std::vector<int>& starts) {
        if (p.x != active_x_) {
            active_verticals_.clear();
            active_x_ = p.x;
        }
        x_ = p.x;
        if (trace) {
            printf("event (%.17g, %.17g) starts:", p.x, p.y);
            for (int s : starts) printf(" %d", s);
            printf("\n");
        }

        // Gather status members that end at p or pass within eps of it.
        const double band = 4.0 * tol_.eps;
        std::vector<int> ending;
        std::vector<int> through;
        std::vector<int> batch_neighbors;
        {
            probe_y_ = p.y - band;
            auto lo = status_.lower_bound(kProbeLo);
            if (lo != status_.begin()) {
                auto nb = lo;
                --nb;
                batch_neighbors.push_back(*nb);
            }
            auto it = lo;
            while (it != status_.end() && y_at(*it, x_) <= p.y + band) {
                const int s = *it;
                if (right_[s] == p)
                    ending.push_back(s);
                else if (point_segment_distance(p, soup_.segments[s]) < tol_.eps)
                    through.push_back(s);
                ++it;
            }
            if (it != status_.end()) batch_neighbors.push_back(*it);
        }

        if (trace) {
            printf("  ending:");
            for (int s : ending) printf(" %d", s);
            printf(" through:");
            for (int s : through) printf(" %d", s);
            printf(" nbrs:");
            for (int s : batch_neighbors) printf(" %d", s);
            printf("\n");
        }

        std::vector<int> batch;
        batch.reserve(starts.size() + ending.size() + through.size());
        for (int s : starts) batch.push_back(s);
        for (int s : ending) batch.push_back(s);
        for (int s : through) batch.push_back(s);

        for (std::size_t a = 0; a < batch.size(); ++a)
            for (std::size_t b = a + 1; b < batch.size(); ++b) test_pair(batch[a], batch[b], p);
        for (int s : batch)
            for (int nb : batch_neighbors) test_pair(s, nb, p);

        // Vertical segments never enter the status; activate them here and
        // compare every same-column batch against the active ones.
        for (int s : starts) {
            if (!vertical(s)) continue;
            const double ylo = std::min(left_[s].y, right_[s].y) - band;
            const double yhi = std::max(left_[s].y, right_[s].y) + band;
            probe_y_ = ylo;
            for (auto it = status_.lower_bound(kProbeLo);
                 it != status_.end() && y_at(*it, x_) <= yhi; ++it)
                test_pair(s, *it, p);
            for (int v : active_verticals_) test_pair(s, v, p);
            active_verticals_.push_back(s);
        }
        for (int v : active_verticals_)
            for (int s : batch)
                if (s != v) test_pair(s, v, p);

        for (int s : ending) erase_segment(s);
        for (int s : through) erase_segment(s);

        std::vector<int> inserted;
        for (int s : through) inserted.push_back(s);
        for (int s : starts)
            if (!vertical(s) && !(right_[s] == p)) inserted.push_back(s);

        if (inserted.empty()) {
            // A removal may create one new adjacency across the gap.
            probe_y_ = p.y;
            auto hi = status_.lower_bound(kProbeLo);
            if (hi != status_.end() && hi != status_.begin()) {
                auto lo = hi;
                --lo;
                test_pair(*lo, *hi, p);
            }
            return;
        }

        auto first = status_.end();
        auto last = status_.end();
        for (int s : inserted) {
            auto [it, ok] = status_.insert(s);
            if (!ok) continue;
            if (first == status_.end() || status_.key_comp()(*it, *first)) first = it;
            if (last == status_.end() || status_.key_comp()(*last, *it)) last = it;
        }
        if (first != status_.end()) {
            if (first != status_.begin()) {
                auto below = first;
                --below;
                test_pair(*below, *first, p);
            }
            auto above = last;
            ++above;
            if (above != status_.end()) test_pair(*last, *above, p);
        }
    }

    void verify(Point p) const {
        int prev = -1;
        for (int s : status_) {
            if (left_[s].x > x_ || right_[s].x < x_)
                throw std::logic_error("sweep self-check: stale segment " + std::to_string(s) +
                                       " in status at event " + point_str(p));
            if (prev != -1) {
                Cmp cmp{const_cast<Sweep*>(this)};
                if (cmp(s, prev))
                    throw std::logic_error("sweep self-check: order violation between " +
                                           std::to_string(prev) + " and " + std::to_string(s) +
                                           " at event " + point_str(p));
            }
            prev = s;
        }
    }

    void erase_segment(int s) {
        auto it = status_.find(s);
        if (it != status_.end() && *it == s) {
            status_.erase(it);
            return;
        }
        for (auto i = status_.begin(); i != status_.end(); ++i) {
            if (*i == s) {
                status_.erase(i);
                return;
            }
        }
    }

    // Probe sentinels resolved inside the comparator against probe_y_.
    static constexpr int kProbeLo = -1;

    friend struct Cmp;

    const SegmentSoup& soup_;
    Tolerance tol_;
    std::vector<Point> left_;
    std::vector<Point> right_;
    std::vector<int> collapsed_;
    std::map<Point, std::vector<int>, LexLess> events_;
    std::set<int, Cmp> status_;
    std::vector<int> active_verticals_;
    double active_x_ = std::numeric_limits<double>::quiet_NaN();
    double x_ = 0.0;
    double probe_y_ = 0.0;
    std::vector<PairHit> hits_;
    std::unordered_set<std::uint64_t> tested_;
};

}  // namespace detail

inline std::vector<PairHit> sweep_pair_hits(const SegmentSoup& soup, Tolerance tol) {
    detail::Sweep sweep(soup, tol);
    auto hits = sweep.run();
    return hits;
}

inline std::vector<IncidenceRecord> find_intersections(
    std::span<const OrientedJordanCurve> curves, Tolerance tol) {
    const SegmentSoup soup = SegmentSoup::from_curves(curves);
    const auto hits = sweep_pair_hits(soup, tol);
    return build_incidence_records(soup, hits, tol);
}

inline std::vector<IncidenceRecord> find_intersections(
    const std::vector<OrientedJordanCurve>& curves, Tolerance tol) {
    return find_intersections(std::span<const OrientedJordanCurve>(curves), tol);
}

// ---------------------------------------------------------------------------
// Proper / improper classification.
// ---------------------------------------------------------------------------

namespace detail {

// Directions pointing away from `at` along every local branch the curve
// sends through that point.
inline std::vector<Point> branch_directions(const IncidenceRecord& rec, int curve_id,
                                            std::span<const OrientedJordanCurve> curves,
                                            Tolerance tol) {
    std::vector<Point> dirs;
    const auto& curve = curves[static_cast<std::size_t>(curve_id)];
    for (const auto& hit : rec.incident) {
        if (hit.curve != curve_id) continue;
        const Segment e = curve.edge(static_cast<std::size_t>(hit.edge));
        const bool at_a = distance(rec.point, e.a) < tol.eps;
        const bool at_b = distance(rec.point, e.b) < tol.eps;
        if (at_a && !at_b) {
            dirs.push_back(e.b - e.a);
        } else if (at_b && !at_a) {
            dirs.push_back(e.a - e.b);
        } else if (!at_a && !at_b) {
            dirs.push_back(e.a - rec.point);
            dirs.push_back(e.b - rec.point);
        }
        // A hit touching both endpoints would be an edge shorter than eps,
        // which curve normalization rules out.
    }
    return dirs;
}

}  // namespace detail

// Classification of the touch between two specific curves at a record
// point. Proper means the branches of one curve separate the branches of
// the other in the cyclic angular order around the point, i.e. the curves
// genuinely cross there.
inline IntersectionClass classify_pair(const IncidenceRecord& rec, int curve_a, int curve_b,
                                       std::span<const OrientedJordanCurve> curves,
                                       Tolerance tol) {
    const auto da = detail::branch_directions(rec, curve_a, curves, tol);
    const auto db = detail::branch_directions(rec, curve_b, curves, tol);
    if (da.size() < 2 || db.size() < 2)
        throw std::invalid_argument("classify_pair: fewer than two local branches per curve");

    constexpr double kAngleEps = 1e-9;
    std::vector<double> aa;
    std::vector<double> bb;
    for (const Point& d : da) aa.push_back(std::atan2(d.y, d.x));
    for (const Point& d : db) bb.push_back(std::atan2(d.y, d.x));
    // A shared direction means the curves run together rather than cross.
    for (double x : aa)
        for (double y : bb) {
            double diff = std::abs(x - y);
            diff = std::min(diff, 2.0 * std::numbers::pi - diff);
            if (diff < kAngleEps) return IntersectionClass::Improper;
        }
    std::sort(aa.begin(), aa.end());
    // Improper iff every b-branch falls inside the same angular wedge
    // between consecutive a-branches.
    auto wedge_of = [&](double ang) {
        const auto it = std::upper_bound(aa.begin(), aa.end(), ang);
        return static_cast<std::size_t>(it - aa.begin()) % aa.size();
    };
    const std::size_t w0 = wedge_of(bb[0]);
    for (std::size_t k = 1; k < bb.size(); ++k)
        if (wedge_of(bb[k]) != w0) return IntersectionClass::Proper;
    return IntersectionClass::Improper;
}

// Spec entry point: requires exactly two distinct curves at the record.
inline IntersectionClass classify_vertex(const IncidenceRecord& rec,
                                         std::span<const OrientedJordanCurve> curves,
                                         Tolerance tol) {
    std::set<int> ids;
    for (const auto& h : rec.incident) ids.insert(h.curve);
    if (ids.size() != 2)
        throw std::invalid_argument(
            "classify_vertex: record must have exactly two distinct curves incident");
    const int a = *ids.begin();
    const int b = *std::next(ids.begin());
    return classify_pair(rec, a, b, curves, tol);
}

struct PairClassification {
    int curve_a;
    int curve_b;
    IntersectionClass cls;
};

inline std::vector<PairClassification> classify_all_pairs(
    const IncidenceRecord& rec, std::span<const OrientedJordanCurve> curves, Tolerance tol) {
    std::set<int> ids;
    for (const auto& h : rec.incident) ids.insert(h.curve);
    std::vector<int> v(ids.begin(), ids.end());
    std::vector<PairClassification> out;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            out.push_back({v[a], v[b], classify_pair(rec, v[a], v[b], curves, tol)});
    return out;
}

}  // namespace yinset
