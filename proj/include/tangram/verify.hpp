#pragma once
// One-shot verification of the full claimed result table: the census of
// coverable convex shapes, the per-shape partition counts, and the
// strip rearrangement theorem. Everything is recomputed from scratch.

#include <array>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "tangram/canon.hpp"
#include "tangram/census.hpp"
#include "tangram/solver.hpp"
#include "tangram/strips.hpp"
#include "tangram/tans.hpp"

namespace tangram {

/// Expected canonical partition counts for shapes 1..16, seven-piece
/// set with the two slanted triangles. The sum is 531.
inline const std::array<long, 16>& expected_counts() {
    static const std::array<long, 16> counts = {34, 38, 43, 61, 19, 72, 3, 21,
                                                23, 21, 16, 4,  32, 24, 60, 60};
    return counts;
}

struct ShapeCheck {
    int number = 0;
    std::string key;
    long labeled = 0;
    long canonical = 0;
    long expected = 0;
    bool ok() const { return canonical == expected; }
};

struct VerifyReport {
    std::vector<ShapeCheck> shapes;  // numbered order, 1..16
    long total_canonical = 0;
    long total_expected = 0;
    int census_size = 0;
    int japanese_coverable = 0;
    int chinese_coverable = 0;
    bool chinese_subset = false;      // classic-coverable implies japanese-coverable
    bool noncoverable_zero = false;   // full enumeration finds nothing on the rest
    bool chinese_strips_zero = false; // the classic set covers no strip shape
    StripReport strip;

    bool shapes_ok() const {
        for (const ShapeCheck& s : shapes)
            if (!s.ok()) return false;
        return shapes.size() == expected_counts().size();
    }
    bool census_ok() const {
        return census_size == kCensusSize && japanese_coverable == 16 &&
               chinese_coverable == 13 && chinese_subset && noncoverable_zero &&
               chinese_strips_zero;
    }
    bool pass() const {
        return shapes_ok() && total_canonical == total_expected &&
               census_ok() && strip.pass();
    }
};

/// Recompute the whole table. The census must already carry a complete
/// numbering (see load_numbering / apply_numbering).
inline VerifyReport run_verify(const std::vector<ShapeEntry>& census) {
    VerifyReport r;
    r.census_size = static_cast<int>(census.size());
    const TanSet jp = tan_set(SetKind::japanese);
    const TanSet cn = tan_set(SetKind::chinese);

    r.chinese_subset = true;
    r.noncoverable_zero = true;
    for (const ShapeEntry& e : census) {
        bool j = classify_coverability(e, jp);
        bool c = classify_coverability(e, cn);
        r.japanese_coverable += j;
        r.chinese_coverable += c;
        if (c && !j) r.chinese_subset = false;
        if (!j && (!enumerate_partitions(e.region, jp).empty() ||
                   !enumerate_partitions(e.region, cn).empty()))
            r.noncoverable_zero = false;
    }

    for (int n = 1; n <= kNumberedShapes; ++n) {
        const ShapeEntry& e = shape_by_number(n, census);
        ShapeCheck check;
        check.number = n;
        check.key = e.key;
        check.expected = expected_counts()[static_cast<std::size_t>(n - 1)];
        std::vector<Solution> sols = enumerate_partitions(e.region, jp);
        check.labeled = static_cast<long>(sols.size());
        check.canonical = static_cast<long>(dedupe(sols, e.region).size());
        r.total_canonical += check.canonical;
        r.total_expected += check.expected;
        r.shapes.push_back(std::move(check));
    }

    r.chinese_strips_zero = true;
    for (int n : {14, 15, 16}) {
        const ShapeEntry& e = shape_by_number(n, census);
        if (classify_coverability(e, cn) ||
            !enumerate_partitions(e.region, cn).empty())
            r.chinese_strips_zero = false;
    }

    r.strip = verify_strip_theorem();
    return r;
}

inline nlohmann::ordered_json verify_report_json(const VerifyReport& r) {
    nlohmann::ordered_json j;
    j["pass"] = r.pass();
    nlohmann::ordered_json shapes = nlohmann::ordered_json::array();
    for (const ShapeCheck& s : r.shapes)
        shapes.push_back({{"number", s.number},
                          {"name", shape_display_name(s.number)},
                          {"key", s.key},
                          {"labeled", s.labeled},
                          {"canonical", s.canonical},
                          {"expected", s.expected},
                          {"ok", s.ok()}});
    j["shapes"] = std::move(shapes);
    j["total"] = {{"canonical", r.total_canonical},
                  {"expected", r.total_expected},
                  {"ok", r.total_canonical == r.total_expected}};
    j["census"] = {{"size", r.census_size},
                   {"japanese_coverable", r.japanese_coverable},
                   {"chinese_coverable", r.chinese_coverable},
                   {"chinese_subset", r.chinese_subset},
                   {"noncoverable_zero", r.noncoverable_zero},
                   {"chinese_strips_zero", r.chinese_strips_zero},
                   {"ok", r.census_ok()}};
    j["strip_theorem"] = {
        {"strip_labeled", r.strip.strip_labeled},
        {"strip_canonical", r.strip.strip_canonical},
        {"cuts_ok", r.strip.cuts_ok},
        {"vertical_beside_square", r.strip.vertical_beside_square},
        {"twin_pairs", r.strip.twin_pairs},
        {"twin_fixed_points", r.strip.twin_fixed_points},
        {"twins_ok", r.strip.twins_ok},
        {"twin_cuts_match", r.strip.twin_cuts_match},
        {"trapezoid_generated", r.strip.trapezoid_generated},
        {"parallelogram_generated", r.strip.parallelogram_generated},
        {"trapezoid_direct", r.strip.trapezoid_direct},
        {"parallelogram_direct", r.strip.parallelogram_direct},
        {"trapezoid_match", r.strip.trapezoid_match},
        {"parallelogram_match", r.strip.parallelogram_match},
        {"pass", r.strip.pass()}};
    return j;
}

/// Human-readable report, one line per check.
inline std::vector<std::string> verify_report_lines(const VerifyReport& r) {
    std::vector<std::string> out;
    for (const ShapeCheck& s : r.shapes)
        out.push_back("shape " + shape_display_name(s.number) + "  canonical " +
                      std::to_string(s.canonical) + "  expected " +
                      std::to_string(s.expected) + "  " +
                      (s.ok() ? "ok" : "MISMATCH"));
    out.push_back("total canonical " + std::to_string(r.total_canonical) +
                  "  expected " + std::to_string(r.total_expected) + "  " +
                  (r.total_canonical == r.total_expected ? "ok" : "MISMATCH"));
    out.push_back("census " + std::to_string(r.census_size) + " shapes, " +
                  std::to_string(r.japanese_coverable) + " japanese, " +
                  std::to_string(r.chinese_coverable) + " chinese  " +
                  (r.census_ok() ? "ok" : "MISMATCH"));
    out.push_back("strip theorem: " + std::to_string(r.strip.twin_pairs) +
                  " twin pairs, trapezoid " +
                  std::to_string(r.strip.trapezoid_generated) + "/" +
                  std::to_string(r.strip.trapezoid_direct) + ", parallelogram " +
                  std::to_string(r.strip.parallelogram_generated) + "/" +
                  std::to_string(r.strip.parallelogram_direct) + "  " +
                  (r.strip.pass() ? "ok" : "MISMATCH"));
    out.push_back(std::string("verdict ") + (r.pass() ? "PASS" : "FAIL"));
    return out;
}

}  // namespace tangram
