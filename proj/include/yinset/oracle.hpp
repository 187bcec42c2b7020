#pragma once

// Brute-force ground truth used by the test suites: rasterized set
// semantics, all-pairs intersection, and flood-fill topology. Slow is fine
// here; these exist to check the clever paths, not to compete with them.

#include "yinset/boolean.hpp"
#include "yinset/spadjor.hpp"

namespace yinset {

struct Window {
    double x0, y0, x1, y1;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
};

struct RasterGrid {
    Window window{0, 0, 1, 1};
    int n = 0;
    std::vector<std::uint8_t> cells;  // row-major, cell-center membership

    bool at(int ix, int iy) const {
        return cells[static_cast<std::size_t>(iy) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(ix)] != 0;
    }
    Point center(int ix, int iy) const {
        return {window.x0 + (ix + 0.5) * window.width() / n,
                window.y0 + (iy + 0.5) * window.height() / n};
    }
};

// Samples the boundary-to-interior map at cell centers: cell(i,j) is true
// exactly when locate() at the center answers Interior. Computed by
// scanline parity per curve with the same crossing rule locate uses, plus
// an explicit eps band for centers sitting on a boundary.
inline RasterGrid rasterize(const RealizableSpadjor& j, Window window, int n, Tolerance tol) {
    if (n < 2) throw std::invalid_argument("rasterize: need at least a 2x2 grid");
    if (!(window.width() > 0.0) || !(window.height() > 0.0))
        throw std::invalid_argument("rasterize: degenerate window");
    RasterGrid g{window, n, {}};
    g.cells.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    if (j.is_zero()) return g;
    if (j.is_one()) {
        std::fill(g.cells.begin(), g.cells.end(), 1);
        return g;
    }

    const auto& curves = j.curves();
    const std::size_t nc = curves.size();
    // bounded[c] bit per cell: center lies in the bounded complement of curve c.
    std::vector<std::vector<std::uint8_t>> bounded(nc);
    std::vector<std::uint8_t> on_boundary(g.cells.size(), 0);

    for (std::size_t c = 0; c < nc; ++c) {
        bounded[c].assign(g.cells.size(), 0);
        const auto& curve = curves[c];
        for (int iy = 0; iy < n; ++iy) {
            const double py = g.center(0, iy).y;
            std::vector<double> xs;
            for (std::size_t e = 0; e < curve.size(); ++e) {
                const Segment s = curve.edge(e);
                if ((s.a.y <= py) != (s.b.y <= py))
                    xs.push_back(s.a.x + (py - s.a.y) / (s.b.y - s.a.y) * (s.b.x - s.a.x));
            }
            if (xs.empty()) continue;
            std::sort(xs.begin(), xs.end());
            for (int ix = 0; ix < n; ++ix) {
                const double px = g.center(ix, iy).x;
                const auto above = xs.end() - std::upper_bound(xs.begin(), xs.end(), px);
                if (above & 1)
                    bounded[c][static_cast<std::size_t>(iy) * n + ix] = 1;
            }
        }
        // eps band around the outline.
        const double cw = window.width() / n;
        const double ch = window.height() / n;
        for (std::size_t e = 0; e < curve.size(); ++e) {
            const Segment s = curve.edge(e);
            const int ix0 = std::max(
                0, static_cast<int>((std::min(s.a.x, s.b.x) - tol.eps - window.x0) / cw) - 1);
            const int ix1 = std::min(
                n - 1, static_cast<int>((std::max(s.a.x, s.b.x) + tol.eps - window.x0) / cw) + 1);
            const int iy0 = std::max(
                0, static_cast<int>((std::min(s.a.y, s.b.y) - tol.eps - window.y0) / ch) - 1);
            const int iy1 = std::min(
                n - 1, static_cast<int>((std::max(s.a.y, s.b.y) + tol.eps - window.y0) / ch) + 1);
            for (int iy = iy0; iy <= iy1; ++iy)
                for (int ix = ix0; ix <= ix1; ++ix)
                    if (point_segment_distance(g.center(ix, iy), s) < tol.eps)
                        on_boundary[static_cast<std::size_t>(iy) * n + ix] = 1;
        }
    }

    for (std::size_t cell = 0; cell < g.cells.size(); ++cell) {
        if (on_boundary[cell]) continue;
        for (const AtomSpadjor& atom : j.atoms()) {
            bool inside = true;
            if (atom.positive) inside = bounded[static_cast<std::size_t>(*atom.positive)][cell];
            for (int neg : atom.negatives) {
                if (!inside) break;
                inside = !bounded[static_cast<std::size_t>(neg)][cell];
            }
            if (inside) {
                g.cells[cell] = 1;
                break;
            }
        }
    }
    return g;
}

// All-pairs intersection oracle: every segment pair goes through
// segment_intersect, then through the identical clustering and record
// construction the sweep uses.
inline std::vector<IncidenceRecord> brute_intersections(std::span<const Segment> segments,
                                                        Tolerance tol) {
    const SegmentSoup soup = SegmentSoup::from_segments(segments);
    std::vector<PairHit> hits;
    const int n = static_cast<int>(soup.segments.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const IntersectionResult r =
                segment_intersect(soup.segments[i], soup.segments[j], tol);
            if (r.kind != IntersectionKind::None && soup.qualifying_pair(i, j))
                hits.push_back({i, j, r});
        }
    return build_incidence_records(soup, hits, tol);
}

inline std::vector<IncidenceRecord> brute_intersections(
    std::span<const OrientedJordanCurve> curves, Tolerance tol) {
    const SegmentSoup soup = SegmentSoup::from_curves(curves);
    std::vector<PairHit> hits;
    const int n = static_cast<int>(soup.segments.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const IntersectionResult r =
                segment_intersect(soup.segments[i], soup.segments[j], tol);
            if (r.kind != IntersectionKind::None && soup.qualifying_pair(i, j))
                hits.push_back({i, j, r});
        }
    return build_incidence_records(soup, hits, tol);
}

inline std::vector<IncidenceRecord> brute_intersections(
    const std::vector<OrientedJordanCurve>& curves, Tolerance tol) {
    return brute_intersections(std::span<const OrientedJordanCurve>(curves), tol);
}

// Connected components and holes straight from the raster: 4-connectivity
// for filled regions, 8-connectivity for the holes inside them, holes
// assigned to the filled component immediately left of their lexicographic
// minimum. Hole counts are reported in ascending order per component.
inline BettiNumbers flood_betti(const RasterGrid& g) {
    const int n = g.n;
    const auto idx = [n](int x, int y) {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(n) +
               static_cast<std::size_t>(x);
    };
    std::vector<int> comp(g.cells.size(), -1);
    int ncomp = 0;

    std::vector<std::pair<int, int>> stack;
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (!g.at(x, y) || comp[idx(x, y)] != -1) continue;
            const int id = ncomp++;
            stack.push_back({x, y});
            comp[idx(x, y)] = id;
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                constexpr int dx[4] = {1, -1, 0, 0};
                constexpr int dy[4] = {0, 0, 1, -1};
                for (int d = 0; d < 4; ++d) {
                    const int nx = cx + dx[d];
                    const int ny = cy + dy[d];
                    if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
                    if (!g.at(nx, ny) || comp[idx(nx, ny)] != -1) continue;
                    comp[idx(nx, ny)] = id;
                    stack.push_back({nx, ny});
                }
            }
        }

    std::vector<int> holes(static_cast<std::size_t>(ncomp), 0);
    std::vector<int> hole_id(g.cells.size(), -1);
    for (int y = 0; y < n; ++y)
        for (int x = 0; x < n; ++x) {
            if (g.at(x, y) || hole_id[idx(x, y)] != -1) continue;
            bool touches_frame = false;
            std::vector<std::pair<int, int>> cells;
            stack.push_back({x, y});
            hole_id[idx(x, y)] = 1;
            std::pair<int, int> lexmin{x, y};
            while (!stack.empty()) {
                auto [cx, cy] = stack.back();
                stack.pop_back();
                cells.push_back({cx, cy});
                if (std::pair<int, int>{cx, cy} < lexmin) lexmin = {cx, cy};
                if (cx == 0 || cy == 0 || cx == n - 1 || cy == n - 1) touches_frame = true;
                for (int ddx = -1; ddx <= 1; ++ddx)
                    for (int ddy = -1; ddy <= 1; ++ddy) {
                        if (ddx == 0 && ddy == 0) continue;
                        const int nx = cx + ddx;
                        const int ny = cy + ddy;
                        if (nx < 0 || ny < 0 || nx >= n || ny >= n) continue;
                        if (g.at(nx, ny) || hole_id[idx(nx, ny)] != -1) continue;
                        hole_id[idx(nx, ny)] = 1;
                        stack.push_back({nx, ny});
                    }
            }
            if (!touches_frame) {
                // The cell left of the lexicographic minimum is filled; its
                // component encloses this hole.
                const int owner = comp[idx(lexmin.first - 1, lexmin.second)];
                if (owner >= 0) ++holes[static_cast<std::size_t>(owner)];
            }
        }

    BettiNumbers b;
    b.components = ncomp;
    b.holes_per_component = holes;
    std::sort(b.holes_per_component.begin(), b.holes_per_component.end());
    return b;
}

// Counts cells where the two grids disagree, restricted to centers farther
// than `band` from every given curve.
inline int compare_off_band(const RasterGrid& a, const RasterGrid& b,
                            std::span<const OrientedJordanCurve> curves, double band) {
    if (a.n != b.n || !(a.window.x0 == b.window.x0 && a.window.y0 == b.window.y0 &&
                        a.window.x1 == b.window.x1 && a.window.y1 == b.window.y1))
        throw std::invalid_argument("compare_off_band: grids have different windows");
    const int n = a.n;
    const double cw = a.window.width() / n;
    const double ch = a.window.height() / n;
    std::vector<std::uint8_t> near_boundary(a.cells.size(), 0);
    for (const auto& curve : curves) {
        for (std::size_t e = 0; e < curve.size(); ++e) {
            const Segment s = curve.edge(e);
            const int ix0 = std::max(
                0, static_cast<int>((std::min(s.a.x, s.b.x) - band - a.window.x0) / cw) - 1);
            const int ix1 = std::min(
                n - 1, static_cast<int>((std::max(s.a.x, s.b.x) + band - a.window.x0) / cw) + 1);
            const int iy0 = std::max(
                0, static_cast<int>((std::min(s.a.y, s.b.y) - band - a.window.y0) / ch) - 1);
            const int iy1 = std::min(
                n - 1, static_cast<int>((std::max(s.a.y, s.b.y) + band - a.window.y0) / ch) + 1);
            for (int iy = iy0; iy <= iy1; ++iy)
                for (int ix = ix0; ix <= ix1; ++ix)
                    if (point_segment_distance(a.center(ix, iy), s) <= band)
                        near_boundary[static_cast<std::size_t>(iy) * n + ix] = 1;
        }
    }
    int mismatches = 0;
    for (std::size_t c = 0; c < a.cells.size(); ++c)
        if (!near_boundary[c] && a.cells[c] != b.cells[c]) ++mismatches;
    return mismatches;
}

inline int compare_off_band(const RasterGrid& a, const RasterGrid& b,
                            const std::vector<OrientedJordanCurve>& curves, double band) {
    return compare_off_band(a, b, std::span<const OrientedJordanCurve>(curves), band);
}

}  // namespace yinset
