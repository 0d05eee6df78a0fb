#include <algorithm>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tangram/census.hpp"
#include "tangram/embed.hpp"

using namespace tangram;

TEST_CASE("orientation counts with reflections") {
    const std::pair<TanName, std::size_t> expected[] = {
        {TanName::Ts, 4}, {TanName::S, 1},  {TanName::P, 4}, {TanName::Tm, 4},
        {TanName::Tb, 4}, {TanName::Tr, 8}, {TanName::Tz, 4}};
    for (auto [name, count] : expected)
        CHECK(orientations(tan_piece(name)).size() == count);
}

TEST_CASE("orientation counts without reflections") {
    // Only the parallelogram and the right trapezium are chiral.
    const std::pair<TanName, std::size_t> expected[] = {
        {TanName::Ts, 4}, {TanName::S, 1},  {TanName::P, 2}, {TanName::Tm, 4},
        {TanName::Tb, 4}, {TanName::Tr, 4}, {TanName::Tz, 4}};
    for (auto [name, count] : expected)
        CHECK(orientations(tan_piece(name), false).size() == count);
}

TEST_CASE("orientations are anchored, distinct, and reachable by their transform") {
    for (int i = 0; i < kTanKinds; ++i) {
        Tan tan = tan_piece(static_cast<TanName>(i));
        auto vars = orientations(tan);
        std::set<std::vector<TriCell>> distinct;
        for (const OrientedVariant& v : vars) {
            CHECK(cell_anchor(v.cells) == std::pair<int, int>{0, 0});
            CHECK(v.cells == anchored(transformed(v.transform, tan.cells)));
            distinct.insert(v.cells);
        }
        CHECK(distinct.size() == vars.size());
    }
}

TEST_CASE("embeddings into the 1x8 strip") {
    Region strip = j14_region();

    SECTION("square: one per anchor") {
        auto e = tan_embeddings(tan_piece(TanName::S), strip);
        CHECK(e.size() == 8);
    }
    SECTION("isosceles trapezium: six anchors, upright or upside down") {
        auto e = tan_embeddings(tan_piece(TanName::Tz), strip);
        CHECK(e.size() == 12);
    }
    SECTION("big triangle cannot fit a height-1 strip") {
        CHECK(tan_embeddings(tan_piece(TanName::Tb), strip).empty());
    }
    SECTION("cells stay inside the region and match the mask") {
        for (const Embedding& e : tan_embeddings(tan_piece(TanName::Tz), strip)) {
            for (const TriCell& c : e.cells)
                CHECK(std::binary_search(strip.cells.begin(), strip.cells.end(), c));
            CHECK(std::popcount(e.mask) == static_cast<int>(e.cells.size()));
            CHECK(e.mask == cells_to_mask(e.cells, strip));
        }
    }
}

TEST_CASE("embedding sets are stable under region symmetries") {
    Region strip = j14_region();
    for (TanName name : {TanName::Tz, TanName::P, TanName::Ts}) {
        auto embs = tan_embeddings(tan_piece(name), strip);
        std::set<std::vector<TriCell>> cell_sets;
        for (const Embedding& e : embs) cell_sets.insert(e.cells);
        for (const Transform& g : strip.symmetries) {
            std::set<std::vector<TriCell>> mapped;
            for (const Embedding& e : embs) mapped.insert(transformed(g, e.cells));
            CHECK(mapped == cell_sets);
        }
    }
}

TEST_CASE("cover index lists exactly the embeddings through each cell") {
    Region strip = j14_region();
    auto embs = all_embeddings(tan_set(SetKind::japanese), strip);
    CoverIndex idx = build_cover_index(embs, strip);
    REQUIRE(idx.by_cell.size() == 32);
    for (const auto& ids : idx.by_cell) CHECK_FALSE(ids.empty());
    for (std::size_t i = 0; i < embs.size(); ++i) {
        for (const TriCell& c : embs[i].cells) {
            const auto& ids = idx.by_cell[static_cast<std::size_t>(
                region_cell_rank(strip, c))];
            CHECK(std::count(ids.begin(), ids.end(), static_cast<std::int32_t>(i)) == 1);
        }
    }
    std::size_t listed = 0;
    for (const auto& ids : idx.by_cell) listed += ids.size();
    std::size_t cells_total = 0;
    for (const Embedding& e : embs) cells_total += e.cells.size();
    CHECK(listed == cells_total);
}

TEST_CASE("masks index by rank in the region cell list") {
    Region strip = j14_region();
    CHECK(region_mask(strip) == 0xffffffffULL);
    CHECK(region_cell_rank(strip, TriCell{0, 0, Quadrant::N}) == 0);
    CHECK(region_cell_rank(strip, TriCell{7, 0, Quadrant::W}) == 31);
    CHECK(region_cell_rank(strip, TriCell{8, 0, Quadrant::N}) == -1);
    CHECK_THROWS_AS(cells_to_mask({TriCell{8, 0, Quadrant::N}}, strip),
                    std::invalid_argument);

    // A slanted parallelogram overflows 64 bounding-box positions while
    // holding only 32 cells; rank masks keep it solvable.
    Region slant =
        region_from_polygon(polygon_units({{4, 0}, {6, 0}, {2, 4}, {0, 4}}));
    REQUIRE(slant.cells.size() == 32);
    CHECK(slant.bounds == Bounds{6, 4});
    CHECK(region_mask(slant) == 0xffffffffULL);
}

TEST_CASE("masks refuse regions past 64 cells") {
    Region big = region_from_polygon(polygon_units({{0, 0}, {5, 0}, {5, 4}, {0, 4}}));
    CHECK_THROWS_AS(region_mask(big), data_error);
    CHECK_THROWS_AS(tan_embeddings(tan_piece(TanName::S), big), data_error);
}

TEST_CASE("exact cover validator") {
    Region sq = region_from_polygon(polygon_units({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));

    Solution whole;
    whole.placements.push_back({TanName::S, 0, sq.cells});
    CHECK(is_exact_cover(whole, sq));

    Solution halves;
    halves.placements.push_back(
        {TanName::Ts, 0, {{0, 0, Quadrant::S}, {0, 0, Quadrant::W}}});
    halves.placements.push_back(
        {TanName::Ts, 1, {{0, 0, Quadrant::N}, {0, 0, Quadrant::E}}});
    CHECK(is_exact_cover(halves, sq));

    Solution overlapping = halves;
    overlapping.placements[1].cells = {{0, 0, Quadrant::N}, {0, 0, Quadrant::W}};
    CHECK_FALSE(is_exact_cover(overlapping, sq));

    Solution incomplete;
    incomplete.placements.push_back(
        {TanName::Ts, 0, {{0, 0, Quadrant::S}, {0, 0, Quadrant::W}}});
    CHECK_FALSE(is_exact_cover(incomplete, sq));

    Solution stray = halves;
    stray.placements[1].cells = {{0, 1, Quadrant::N}, {0, 0, Quadrant::E}};
    CHECK_FALSE(is_exact_cover(stray, sq));
}
