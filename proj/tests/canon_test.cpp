#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tangram/canon.hpp"
#include "tangram/census.hpp"

using namespace tangram;

TEST_CASE("raster key of the strip") {
    Region strip = j14_region();
    // Tall beats wide lexicographically; every square is fully occupied.
    CHECK(region_key(strip.cells) == "1x8:ffffffff");
    CHECK(cells_from_key("1x8:ffffffff") ==
          rasterize_polygon(polygon_units({{0, 0}, {1, 0}, {1, 8}, {0, 8}})));
}

TEST_CASE("raster keys are congruence invariants") {
    auto shapes = {j7_region(), j14_region(), j15_region(), j16_region()};
    std::set<std::string> keys;
    for (const Region& r : shapes) {
        std::string key = region_key(r.cells);
        keys.insert(key);
        for (const Transform& g : point_group()) {
            auto img = translated(transformed(g, r.cells), 3, -2);
            CHECK(region_key(img) == key);
        }
        CHECK(region_key(cells_from_key(key)) == key);
    }
    CHECK(keys.size() == 4);
}

TEST_CASE("malformed raster keys are rejected") {
    CHECK_THROWS_AS(cells_from_key("8:ffffffff"), std::invalid_argument);
    CHECK_THROWS_AS(cells_from_key("2x2:fff"), std::invalid_argument);
    CHECK_THROWS_AS(cells_from_key("2x2:ffgf"), std::invalid_argument);
    CHECK_THROWS_AS(cells_from_key("0x2:"), std::invalid_argument);
}

TEST_CASE("normalized orders placements and renumbers copies") {
    Solution s;
    s.placements.push_back({TanName::Tm, 5, {{2, 0, Quadrant::S}, {2, 0, Quadrant::W}}});
    s.placements.push_back({TanName::Ts, 9, {{0, 0, Quadrant::S}}});
    s.placements.push_back({TanName::Tm, 4, {{1, 0, Quadrant::S}}});
    Solution n = normalized(s);
    REQUIRE(n.placements.size() == 3);
    CHECK(n.placements[0].tan == TanName::Ts);
    CHECK(n.placements[0].instance == 0);
    CHECK(n.placements[1].tan == TanName::Tm);
    CHECK(n.placements[1].instance == 0);
    CHECK(n.placements[1].cells.front() == TriCell{1, 0, Quadrant::S});
    CHECK(n.placements[2].instance == 1);
}

namespace {

// The medium triangle split into its two halves.
Solution split_triangle() {
    Solution s;
    s.placements.push_back(
        {TanName::Ts, 0, {{0, 0, Quadrant::E}, {0, 0, Quadrant::S}}});
    s.placements.push_back(
        {TanName::Ts, 1, {{1, 0, Quadrant::S}, {1, 0, Quadrant::W}}});
    return s;
}

}  // namespace

TEST_CASE("canonical key of a mirror-symmetric split") {
    Region tri = make_region(tan_piece(TanName::Tm).cells, "medium-triangle");
    REQUIRE(tri.symmetries.size() == 2);

    CanonicalSolution c = canonicalize(split_triangle(), tri);
    CHECK(c.key == "Ts:01,02;Ts:06,07");
    // The mirror swaps the two halves, so the labeled orbit collapses.
    CHECK(c.orbit_size == 1);
    CHECK(is_exact_cover(c.representative, tri));

    for (const Transform& g : tri.symmetries)
        CHECK(solution_key(transformed(g, split_triangle()), tri) == c.key);

    // Relabeling the copies does not change the key either.
    Solution swapped = split_triangle();
    std::swap(swapped.placements[0].instance, swapped.placements[1].instance);
    CHECK(solution_key(swapped, tri) == c.key);
}

TEST_CASE("canonicalize rejects non-covers") {
    Region tri = make_region(tan_piece(TanName::Tm).cells);
    Solution s = split_triangle();
    s.placements.pop_back();
    CHECK_THROWS_AS(canonicalize(s, tri), std::invalid_argument);
}

TEST_CASE("colored classes distinguish copies only up to symmetry") {
    SECTION("two squares in a 2x1 rectangle collapse to one class") {
        // The mirror exchanges the copies, so both labelings coincide.
        Region rect =
            region_from_polygon(polygon_units({{0, 0}, {2, 0}, {2, 1}, {0, 1}}));
        Solution s;
        s.placements.push_back({TanName::S, 0, tan_piece(TanName::S).cells});
        s.placements.push_back(
            {TanName::S, 1, translated(tan_piece(TanName::S).cells, 1, 0)});
        auto canon = dedupe({s}, rect);
        REQUIRE(canon.size() == 1);
        CHECK(canon[0].orbit_size == 1);
        CHECK(colored_count(canon, rect) == 1);
    }
    SECTION("three squares in an L keep three of six labelings") {
        // The diagonal flip fixes the corner square and swaps the arms.
        Region ell = region_from_polygon(
            polygon_units({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}}));
        REQUIRE(ell.symmetries.size() == 2);
        Solution s;
        s.placements.push_back({TanName::S, 0, tan_piece(TanName::S).cells});
        s.placements.push_back(
            {TanName::S, 1, translated(tan_piece(TanName::S).cells, 1, 0)});
        s.placements.push_back(
            {TanName::S, 2, translated(tan_piece(TanName::S).cells, 0, 1)});
        auto canon = dedupe({s}, ell);
        REQUIRE(canon.size() == 1);
        auto classes = colored_classes(canon, ell);
        CHECK(classes.size() == 3);
        std::set<std::string> keys;
        for (const auto& [key, sol] : classes) {
            keys.insert(key);
            CHECK(is_exact_cover(sol, ell));
        }
        CHECK(keys.size() == 3);
    }
}
