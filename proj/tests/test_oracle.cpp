#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fixtures.hpp"
#include "yinset/oracle.hpp"

using namespace yinset;
using fixtures::rect_curve;

namespace {
const Tolerance kTol(1e-9);
}

TEST_CASE("rasterize specials and a full square") {
    const Window w{0, 0, 1, 1};
    const auto z = rasterize(RealizableSpadjor::zero(), w, 4, kTol);
    CHECK(std::count(z.cells.begin(), z.cells.end(), 1) == 0);
    const auto o = rasterize(RealizableSpadjor::one(), w, 4, kTol);
    CHECK(std::count(o.cells.begin(), o.cells.end(), 1) == 16);

    const auto j = RealizableSpadjor::from_curves({rect_curve(0, 0, 1, 1, true, kTol)}, kTol);
    const auto g = rasterize(j, w, 4, kTol);
    CHECK(std::count(g.cells.begin(), g.cells.end(), 1) == 16);

    CHECK_THROWS_AS(rasterize(j, w, 1, kTol), std::invalid_argument);
    CHECK_THROWS_AS(rasterize(j, Window{1, 0, 1, 1}, 4, kTol), std::invalid_argument);
}

TEST_CASE("rasterize matches per-cell locate") {
    std::mt19937 rng(404);
    fixtures::GenParams p;
    const Window w{0, 0, 1, 1};
    for (int trial = 0; trial < 6; ++trial) {
        const auto j = fixtures::random_spadjor(rng, p, kTol);
        const auto g = rasterize(j, w, 48, kTol);
        for (int iy = 0; iy < 48; ++iy)
            for (int ix = 0; ix < 48; ++ix) {
                const bool want = locate(j, g.center(ix, iy), kTol) == PointLocation::Interior;
                CHECK(g.at(ix, iy) == want);
            }
    }
}

TEST_CASE("brute_intersections basics") {
    std::vector<Segment> crossing{{{0, 0}, {2, 2}}, {{0, 2}, {2, 0}}};
    CHECK(brute_intersections(std::span<const Segment>(crossing), kTol).size() == 1);

    std::vector<Segment> parallel;
    for (int i = 0; i < 8; ++i)
        parallel.push_back({{0, 0.1 * i}, {1, 0.1 * i}});
    CHECK(brute_intersections(std::span<const Segment>(parallel), kTol).empty());
}

TEST_CASE("flood_betti on annulus, disjoint squares, and the fixture") {
    const auto annulus = RealizableSpadjor::from_curves(
        {rect_curve(1, 1, 7, 7, true, kTol), rect_curve(3, 3, 5, 5, false, kTol)}, kTol);
    const auto ga = rasterize(annulus, Window{0, 0, 8, 8}, 128, kTol);
    const auto ba = flood_betti(ga);
    CHECK(ba.components == 1);
    CHECK(ba.holes_per_component == std::vector<int>{1});

    const auto two = RealizableSpadjor::from_curves(
        {rect_curve(1, 1, 3, 3, true, kTol), rect_curve(5, 5, 7, 7, true, kTol)}, kTol);
    const auto gt = rasterize(two, Window{0, 0, 8, 8}, 128, kTol);
    const auto bt = flood_betti(gt);
    CHECK(bt.components == 2);
    CHECK(bt.holes_per_component == std::vector<int>{0, 0});

    const auto j =
        RealizableSpadjor::from_curves(fixtures::four_component_fixture(kTol), kTol);
    const auto gj = rasterize(j, Window{-6, -1, 11, 11}, 512, kTol);
    const auto bj = flood_betti(gj);
    CHECK(bj.components == 4);
    CHECK(bj.holes_per_component == std::vector<int>{0, 0, 0, 3});
}

TEST_CASE("compare_off_band") {
    const auto j = RealizableSpadjor::from_curves({rect_curve(2, 2, 6, 6, true, kTol)}, kTol);
    const Window w{0, 0, 8, 8};
    const auto a = rasterize(j, w, 64, kTol);
    CHECK(compare_off_band(a, a, j.curves(), 2.0 * 8.0 / 64) == 0);

    auto neg = a;
    for (auto& c : neg.cells) c = !c;
    CHECK(compare_off_band(a, neg, j.curves(), 2.0 * 8.0 / 64) > 0);

    RasterGrid other{Window{0, 0, 4, 4}, 64, a.cells};
    CHECK_THROWS_AS(compare_off_band(a, other, j.curves(), 0.25), std::invalid_argument);
}

TEST_CASE("meet raster equals AND of rasters off the band") {
    const auto a = RealizableSpadjor::from_curves({rect_curve(0, 0, 2, 2, true, kTol)}, kTol);
    const auto b = RealizableSpadjor::from_curves({rect_curve(1, 1, 3, 3, true, kTol)}, kTol);
    const auto m = meet(a, b, kTol);
    const Window w{-0.5, -0.5, 3.5, 3.5};
    const int n = 128;
    const auto ga = rasterize(a, w, n, kTol);
    const auto gb = rasterize(b, w, n, kTol);
    const auto gm = rasterize(m, w, n, kTol);
    auto both = ga;
    for (std::size_t i = 0; i < both.cells.size(); ++i)
        both.cells[i] = ga.cells[i] && gb.cells[i];
    std::vector<OrientedJordanCurve> all = a.curves();
    all.insert(all.end(), b.curves().begin(), b.curves().end());
    CHECK(compare_off_band(gm, both, all, 2.0 * w.width() / n) == 0);
}

TEST_CASE("flood_betti equals betti on random well-resolved spadjors") {
    std::mt19937 rng(713);
    const auto p = fixtures::well_resolved_params();
    for (int trial = 0; trial < 10; ++trial) {
        const auto j = fixtures::random_spadjor(rng, p, kTol);
        const auto g = rasterize(j, Window{0, 0, 1, 1}, 512, kTol);
        const auto fb = flood_betti(g);
        auto bb = betti(j);
        std::sort(bb.holes_per_component.begin(), bb.holes_per_component.end());
        INFO("trial " << trial);
        CHECK(fb.components == bb.components);
        CHECK(fb.holes_per_component == bb.holes_per_component);
    }
}
