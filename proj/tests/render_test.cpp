#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tangram/render.hpp"
#include "tangram/solver.hpp"

using namespace tangram;

namespace {

bool cyclically_equal(const Polygon& a, const Polygon& b) {
    if (a.size() != b.size()) return false;
    std::size_t n = a.size();
    for (std::size_t off = 0; off < n; ++off) {
        bool all = true;
        for (std::size_t i = 0; i < n && all; ++i)
            all = a[i] == b[(i + off) % n];
        if (all) return true;
    }
    return false;
}

std::size_t count_of(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t at = hay.find(needle); at != std::string::npos;
         at = hay.find(needle, at + needle.size()))
        ++n;
    return n;
}

const std::vector<Solution>& strip_reps() {
    static const std::vector<Solution> reps = [] {
        Region r = j14_region();
        std::vector<Solution> out;
        for (const CanonicalSolution& c :
             dedupe(enumerate_partitions(r, tan_set(SetKind::japanese)), r))
            out.push_back(c.representative);
        return out;
    }();
    return reps;
}

}  // namespace

TEST_CASE("tracing a tan's cells recovers its defining polygon") {
    for (SetKind kind : {SetKind::japanese, SetKind::chinese})
        for (const Tan& tan : tan_set(kind).tans) {
            Polygon traced = trace_boundary(tan.cells);
            CHECK(shoelace_doubled(traced) > 0);
            CHECK(cyclically_equal(traced, tan.polygon));
        }
}

TEST_CASE("tracing merges collinear lattice vertices") {
    Region tilted = j7_region();
    Polygon traced = trace_boundary(tilted.cells);
    REQUIRE(traced.size() == 4);
    CHECK(cyclically_equal(traced, Polygon{{4, 0}, {8, 4}, {4, 8}, {0, 4}}));

    Polygon strip = trace_boundary(j14_region().cells);
    CHECK(cyclically_equal(strip, polygon_units({{0, 0}, {8, 0}, {8, 1}, {0, 1}})));
}

TEST_CASE("traced boundaries enclose exactly the traced cells") {
    for (const ShapeEntry& e : enumerate_convex_shapes()) {
        Polygon traced = trace_boundary(e.region.cells);
        CHECK(polygon_area_cells(traced) == 32);
        CHECK(rasterize_polygon(traced) == e.region.cells);
    }
}

TEST_CASE("tracing is independent of cell order") {
    std::vector<TriCell> cells = j15_region().cells;
    Polygon reference = trace_boundary(cells);
    std::mt19937 rng(271);
    for (int round = 0; round < 5; ++round) {
        std::shuffle(cells.begin(), cells.end(), rng);
        CHECK(trace_boundary(cells) == reference);
    }
}

TEST_CASE("tracing rejects broken unions") {
    CHECK_THROWS_AS(trace_boundary({}), std::invalid_argument);
    // two triangles meeting only at the square's center pinch the loop
    CHECK_THROWS_AS(trace_boundary({{0, 0, Quadrant::W}, {0, 0, Quadrant::E}}),
                    data_error);
    // duplicated cell
    CHECK_THROWS_AS(trace_boundary({{0, 0, Quadrant::W}, {0, 0, Quadrant::W}}),
                    data_error);
}

TEST_CASE("a rendered partition is a complete standalone picture") {
    Region r = j14_region();
    const Solution& sol = strip_reps().front();
    std::string svg = render_solution(r, sol);
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.find("width=\"360\" height=\"80\"") != std::string::npos);
    CHECK(count_of(svg, "<polygon") == 8);  // seven pieces and the outline
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    CHECK(svg.find("NaN") == std::string::npos);

    SECTION("piece fills follow the palette") {
        for (const Placement& p : sol.placements)
            CHECK(svg.find(tan_color(p.tan)) != std::string::npos);
        std::string plain = render_solution(r, sol, Style{40, false, false, false});
        CHECK(plain.find("#e41a1c") == std::string::npos);
        CHECK(count_of(plain, "\"#ffffff\"") == 7);
    }
    SECTION("labels and grid are opt-in") {
        CHECK(svg.find("<text") == std::string::npos);
        CHECK(svg.find("<line") == std::string::npos);
        std::string deluxe = render_solution(r, sol, Style{40, true, true, true});
        CHECK(count_of(deluxe, "<line") == 9 + 2);  // 9 vertical, 2 horizontal
        CHECK(count_of(deluxe, "<text") == 7);
        CHECK(deluxe.find(">Tz</text>") != std::string::npos);
    }
    SECTION("rendering twice gives identical bytes") {
        CHECK(render_solution(r, sol) == svg);
    }
    SECTION("an odd scale renders on the half-pixel lattice") {
        std::string tiny = render_solution(r, sol, Style{5, false, false, true});
        CHECK(tiny.find(".5") != std::string::npos);
        CHECK(tiny.find(".25") == std::string::npos);
    }
    SECTION("non-covers are refused") {
        Solution partial{{sol.placements.front()}};
        CHECK_THROWS_AS(render_solution(r, partial), std::invalid_argument);
    }
}

TEST_CASE("a contact sheet carries one captioned panel per partition") {
    Region r = j14_region();
    std::string sheet = render_sheet(r, strip_reps());
    CHECK(count_of(sheet, "<g transform=\"translate(") == 24);
    CHECK(sheet.find(">#1</text>") != std::string::npos);
    CHECK(sheet.find(">#24</text>") != std::string::npos);
    CHECK(count_of(sheet, "<polygon") == 24 * 8);
    CHECK(render_sheet(r, strip_reps()) == sheet);
    CHECK_THROWS_AS(render_sheet(r, strip_reps(), Style{}, 0),
                    std::invalid_argument);
}

TEST_CASE("the catalog sheet shows every shape with its badges") {
    auto census = enumerate_convex_shapes();
    Numbering table = load_numbering(
        std::string(TANGRAM_SOURCE_DIR) + "/data/shape_numbers.txt", census);
    apply_numbering(census, table);
    std::vector<std::pair<bool, bool>> coverable;
    TanSet jp = tan_set(SetKind::japanese);
    TanSet cn = tan_set(SetKind::chinese);
    for (const ShapeEntry& e : census)
        coverable.push_back({classify_coverability(e, jp),
                             classify_coverability(e, cn)});
    std::string sheet = render_catalog(census, coverable);
    CHECK(count_of(sheet, "<g transform=\"translate(") == 20);
    CHECK(sheet.find("J14 [J-]") != std::string::npos);  // no classic-set strip
    CHECK(sheet.find("J07 [JC]") != std::string::npos);
    CHECK(count_of(sheet, "[--]") == 4);
    CHECK(render_catalog(census, coverable) == sheet);
    coverable.pop_back();
    CHECK_THROWS_AS(render_catalog(census, coverable), std::invalid_argument);
}
