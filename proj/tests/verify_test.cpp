#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tangram/verify.hpp"

using namespace tangram;

namespace {

const VerifyReport& report() {
    static const VerifyReport r = [] {
        auto census = enumerate_convex_shapes();
        Numbering table = load_numbering(
            std::string(TANGRAM_SOURCE_DIR) + "/data/shape_numbers.txt", census);
        apply_numbering(census, table);
        return run_verify(census);
    }();
    return r;
}

}  // namespace

TEST_CASE("the recomputed table matches the claimed counts") {
    const VerifyReport& r = report();
    REQUIRE(r.shapes.size() == 16);
    for (const ShapeCheck& s : r.shapes) {
        INFO("shape " << s.number << " key " << s.key);
        CHECK(s.canonical == s.expected);
        CHECK(s.labeled >= s.canonical);
    }
    CHECK(r.shapes[5].canonical == 72);   // the 2x5 box is the richest shape
    CHECK(r.shapes[6].canonical == 3);    // the tilted square the sparsest
    CHECK(r.total_canonical == 531);
    CHECK(r.total_expected == 531);
}

TEST_CASE("the census checks and the strip theorem feed the verdict") {
    const VerifyReport& r = report();
    CHECK(r.census_size == 20);
    CHECK(r.japanese_coverable == 16);
    CHECK(r.chinese_coverable == 13);
    CHECK(r.chinese_subset);
    CHECK(r.noncoverable_zero);
    CHECK(r.chinese_strips_zero);
    CHECK(r.census_ok());
    CHECK(r.strip.pass());
    CHECK(r.shapes_ok());
    CHECK(r.pass());
}

TEST_CASE("report serializations are stable and honest") {
    const VerifyReport& r = report();
    nlohmann::ordered_json j = verify_report_json(r);
    CHECK(j["pass"] == true);
    CHECK(j["shapes"].size() == 16);
    CHECK(j["shapes"][0]["name"] == "J01");
    CHECK(j["total"]["canonical"] == 531);
    CHECK(j["census"]["ok"] == true);
    CHECK(j["strip_theorem"]["pass"] == true);
    CHECK(verify_report_json(r).dump(2) == j.dump(2));

    std::vector<std::string> lines = verify_report_lines(r);
    REQUIRE(lines.size() == 16 + 4);
    CHECK(lines.front().find("J01") != std::string::npos);
    CHECK(lines.back() == "verdict PASS");
    for (const std::string& line : lines)
        CHECK(line.find("MISMATCH") == std::string::npos);

    // a poisoned report must not pass
    VerifyReport bad = r;
    bad.shapes[3].canonical -= 1;
    CHECK_FALSE(bad.shapes_ok());
    CHECK_FALSE(bad.pass());
    CHECK(verify_report_json(bad)["pass"] == false);
    bool found = false;
    for (const std::string& line : verify_report_lines(bad))
        found = found || line.find("MISMATCH") != std::string::npos;
    CHECK(found);
}
