#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "yinset/oracle.hpp"
#include "yinset/sweep.hpp"

using namespace yinset;
using fixtures::rect_curve;

namespace {
const Tolerance kTol(1e-9);
}

TEST_CASE("disjoint squares have no intersections") {
    std::vector<OrientedJordanCurve> curves{rect_curve(0, 0, 1, 1, true, kTol),
                                            rect_curve(10, 10, 11, 11, true, kTol)};
    CHECK(find_intersections(curves, kTol).empty());
}

TEST_CASE("overlapping squares intersect at two crossing points") {
    std::vector<OrientedJordanCurve> curves{rect_curve(0, 0, 2, 2, true, kTol),
                                            rect_curve(1, 1, 3, 3, true, kTol)};
    const auto records = find_intersections(curves, kTol);
    const auto expect = brute_intersections(curves, kTol);
    CHECK(fixtures::records_equivalent(records, expect, kTol));
    REQUIRE(records.size() == 2);
    CHECK(points_equal(records[0].point, {1, 2}, kTol));
    CHECK(points_equal(records[1].point, {2, 1}, kTol));
    for (const auto& r : records) {
        CHECK(r.incident.size() >= 2);
        CHECK_FALSE(r.overlap);
    }
}

TEST_CASE("shared full edge reports overlap endpoints") {
    std::vector<OrientedJordanCurve> curves{rect_curve(0, 0, 1, 1, true, kTol),
                                            rect_curve(1, 0, 2, 1, true, kTol)};
    const auto records = find_intersections(curves, kTol);
    const auto expect = brute_intersections(curves, kTol);
    CHECK(fixtures::records_equivalent(records, expect, kTol));
    REQUIRE(records.size() == 2);
    CHECK(points_equal(records[0].point, {1, 0}, kTol));
    CHECK(points_equal(records[1].point, {1, 1}, kTol));
    CHECK(records[0].overlap);
    CHECK(records[1].overlap);
}

TEST_CASE("classification: transversal crossing is proper") {
    std::vector<OrientedJordanCurve> curves{rect_curve(0, 0, 2, 2, true, kTol),
                                            rect_curve(1, 1, 3, 3, true, kTol)};
    const auto records = find_intersections(curves, kTol);
    REQUIRE(records.size() == 2);
    for (const auto& r : records)
        CHECK(classify_vertex(r, curves, kTol) == IntersectionClass::Proper);
}

TEST_CASE("classification: corner touch is improper") {
    std::vector<OrientedJordanCurve> curves{rect_curve(0, 0, 1, 1, true, kTol),
                                            rect_curve(1, 1, 2, 2, true, kTol)};
    const auto records = find_intersections(curves, kTol);
    REQUIRE(records.size() == 1);
    CHECK(points_equal(records[0].point, {1, 1}, kTol));
    CHECK(classify_vertex(records[0], curves, kTol) == IntersectionClass::Improper);
}

TEST_CASE("classification: two boundary wedges meeting at a point are improper") {
    // Two curves of one region meeting at q with four wedges, as at a
    // pinch point of a valid region boundary.
    const auto curves = fixtures::four_component_fixture(kTol);
    const auto records = find_intersections(curves, kTol);
    bool found = false;
    for (const auto& r : records) {
        std::set<int> ids;
        for (const auto& h : r.incident) ids.insert(h.curve);
        if (ids == std::set<int>{0, 3}) {
            found = true;
            CHECK(classify_vertex(r, curves, kTol) == IntersectionClass::Improper);
        }
    }
    CHECK(found);
}

TEST_CASE("vertex on edge is reported") {
    // Apex of the triangle lies on the square's top edge.
    std::vector<OrientedJordanCurve> curves{
        rect_curve(0, 0, 4, 4, true, kTol),
        OrientedJordanCurve({{1, 5}, {3, 5}, {2, 4}}, kTol)};
    const auto records = find_intersections(curves, kTol);
    REQUIRE(records.size() == 1);
    CHECK(points_equal(records[0].point, {2, 4}, kTol));
    const auto expect = brute_intersections(curves, kTol);
    CHECK(fixtures::records_equivalent(records, expect, kTol));
}

TEST_CASE("result independent of curve order and rotation") {
    auto curves = fixtures::four_component_fixture(kTol);
    const auto base = find_intersections(curves, kTol);

    std::vector<OrientedJordanCurve> shuffled{curves[3], curves[0], curves[5],
                                              curves[1], curves[6], curves[2], curves[4]};
    const auto reordered = find_intersections(shuffled, kTol);
    REQUIRE(base.size() == reordered.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(points_equal(base[i].point, reordered[i].point, kTol));

    std::vector<OrientedJordanCurve> rotated;
    for (const auto& c : curves) {
        std::vector<Point> v = c.vertices();
        std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2), v.end());
        rotated.emplace_back(v, kTol);
    }
    const auto rot = find_intersections(rotated, kTol);
    REQUIRE(base.size() == rot.size());
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(points_equal(base[i].point, rot[i].point, kTol));
}

TEST_CASE("sweep equals brute force on random segment soups") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 20 + trial * 3;
        const auto segs =
            fixtures::random_segments(rng, n, 0.25, /*degenerate=*/trial % 2 == 1);
        const SegmentSoup soup = SegmentSoup::from_segments(segs);
        const auto hits = sweep_pair_hits(soup, kTol);
        const auto got = build_incidence_records(soup, hits, kTol);
        const auto want = brute_intersections(std::span<const Segment>(segs), kTol);
        INFO("trial " << trial << " n=" << n);
        CHECK(fixtures::records_equivalent(got, want, kTol));
    }
}

TEST_CASE("sweep equals brute force on random curve families") {
    std::mt19937 rng(99);
    fixtures::GenParams p;
    for (int trial = 0; trial < 25; ++trial) {
        const auto j = fixtures::random_spadjor(rng, p, kTol);
        const auto k = fixtures::random_spadjor(rng, p, kTol);
        std::vector<OrientedJordanCurve> all = j.curves();
        all.insert(all.end(), k.curves().begin(), k.curves().end());
        const auto got = find_intersections(all, kTol);
        const auto want = brute_intersections(all, kTol);
        INFO("trial " << trial);
        CHECK(fixtures::records_equivalent(got, want, kTol));
    }
}
