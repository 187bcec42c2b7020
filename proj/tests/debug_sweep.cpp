// Developer harness: randomized sweep-vs-brute stress with configurable
// trials, including axis-aligned soups heavy in verticals and overlaps.
#include <iostream>
#include <random>

#include "fixtures.hpp"
#include "yinset/oracle.hpp"
#include "yinset/sweep.hpp"

using namespace yinset;

namespace {

const Tolerance kTol(1e-9);

std::vector<Segment> axis_aligned(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> g(0, 40);
    std::uniform_int_distribution<int> len(1, 10);
    std::uniform_int_distribution<int> axis(0, 1);
    std::vector<Segment> segs;
    for (int i = 0; i < n; ++i) {
        const double x = g(rng) / 8.0;
        const double y = g(rng) / 8.0;
        const double l = len(rng) / 8.0;
        if (axis(rng))
            segs.push_back({{x, y}, {x, y + l}});
        else
            segs.push_back({{x, y}, {x + l, y}});
    }
    return segs;
}

bool check(const std::vector<Segment>& segs, const char* tag, int trial) {
    const SegmentSoup soup = SegmentSoup::from_segments(segs);
    std::vector<PairHit> hits;
    try {
        hits = sweep_pair_hits(soup, kTol);
    } catch (const std::logic_error& e) {
        std::cout << tag << " trial " << trial << ": " << e.what() << "\n";
        std::cout.precision(17);
        int a = -1, b = -1;
        std::sscanf(e.what(), "sweep self-check: order violation between %d and %d", &a, &b);
        for (int s : {a, b})
            if (s >= 0 && s < static_cast<int>(segs.size()))
                std::cout << "  seg " << s << " {{" << segs[static_cast<std::size_t>(s)].a.x
                          << ", " << segs[static_cast<std::size_t>(s)].a.y << "}, {"
                          << segs[static_cast<std::size_t>(s)].b.x << ", "
                          << segs[static_cast<std::size_t>(s)].b.y << "}}\n";
        return false;
    }
    const auto got = build_incidence_records(soup, hits, kTol);
    const auto want = brute_intersections(std::span<const Segment>(segs), kTol);
    if (fixtures::records_equivalent(got, want, kTol)) return true;
    std::cout << tag << " trial " << trial << " MISMATCH: sweep " << got.size() << " brute "
              << want.size() << " records\n";
    std::set<std::pair<int, int>> sp;
    for (const auto& h : hits) sp.insert({std::min(h.i, h.j), std::max(h.i, h.j)});
    std::cout.precision(17);
    for (int i = 0; i < static_cast<int>(segs.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(segs.size()); ++j) {
            const auto r = segment_intersect(segs[static_cast<std::size_t>(i)],
                                             segs[static_cast<std::size_t>(j)], kTol);
            if (r.kind == IntersectionKind::None || sp.count({i, j})) continue;
            std::cout << "  missed (" << i << "," << j << ") kind " << static_cast<int>(r.kind)
                      << "\n   A {{" << segs[static_cast<std::size_t>(i)].a.x << ", "
                      << segs[static_cast<std::size_t>(i)].a.y << "}, {"
                      << segs[static_cast<std::size_t>(i)].b.x << ", "
                      << segs[static_cast<std::size_t>(i)].b.y << "}}\n   B {{"
                      << segs[static_cast<std::size_t>(j)].a.x << ", "
                      << segs[static_cast<std::size_t>(j)].a.y << "}, {"
                      << segs[static_cast<std::size_t>(j)].b.x << ", "
                      << segs[static_cast<std::size_t>(j)].b.y << "}}\n";
        }
    return false;
}

}  // namespace

int main(int argc, char** argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 200;
    yinset::detail::Sweep::self_check = true;
    int failures = 0;
    std::mt19937 rng(555);
    for (int t = 0; t < trials; ++t) {
        const auto segs = fixtures::random_segments(rng, 20 + t % 180, 0.2, t % 2);
        if (!check(segs, "random", t)) ++failures;
    }
    for (int t = 0; t < trials; ++t) {
        const auto segs = axis_aligned(rng, 20 + t % 100);
        if (!check(segs, "axis", t)) ++failures;
    }
    std::cout << (failures ? "FAILURES: " : "all ok: ") << failures << "\n";
    return failures != 0;
}
