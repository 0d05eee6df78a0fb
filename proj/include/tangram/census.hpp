#pragma once

// Census of target shapes: every convex lattice polygon of 32 cells,
// found by cutting the four corners off a W x H rectangle with isosceles
// right triangles. Corner cuts (a, b, c, d) go counterclockwise from the
// lower-left; the area in half-squares is 2WH - (a^2+b^2+c^2+d^2) = 16
// and the cuts must fit their sides. Congruent results collapse under
// the raster key.

#include <algorithm>
#include <array>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tangram/canon.hpp"
#include "tangram/solver.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

inline constexpr int kCensusSize = 20;
inline constexpr int kNumberedShapes = 16;

struct ShapeEntry {
    std::optional<int> number;      // 1-based, from a numbering table
    Region region;
    std::array<int, 6> descriptor;  // W, H, a, b, c, d of one representative
    std::string key;
};

namespace detail {

// Corner template, counterclockwise, before degeneracy cleanup.
inline Polygon corner_cut_polygon(int w, int h, int a, int b, int c, int d) {
    Polygon raw = polygon_units({{a, 0},
                                 {w - b, 0},
                                 {w, b},
                                 {w, h - c},
                                 {w - c, h},
                                 {d, h},
                                 {0, h - d},
                                 {0, a}});
    Polygon poly;
    for (const P2& p : raw)
        if (poly.empty() || poly.back() != p) poly.push_back(p);
    while (poly.size() > 1 && poly.front() == poly.back()) poly.pop_back();
    // Drop collinear middle vertices (full corner cuts merge edges).
    for (std::size_t i = 0; i < poly.size() && poly.size() > 3;) {
        const P2& prev = poly[(i + poly.size() - 1) % poly.size()];
        const P2& cur = poly[i];
        const P2& next = poly[(i + 1) % poly.size()];
        long long cross = static_cast<long long>(cur.x - prev.x) * (next.y - prev.y) -
                          static_cast<long long>(next.x - prev.x) * (cur.y - prev.y);
        if (cross == 0) {
            poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
            i = 0;
        } else {
            ++i;
        }
    }
    return poly;
}

}  // namespace detail

/// All 32-cell convex shapes, deduplicated by raster key and sorted by
/// it. The census is a fixed mathematical object; finding any count
/// other than 20 is an integrity failure.
inline std::vector<ShapeEntry> enumerate_convex_shapes() {
    std::vector<ShapeEntry> out;
    std::vector<std::string> seen;
    for (int w = 1; w <= 10; ++w) {
        for (int h = 1; h <= w; ++h) {
            for (int a = 0; a <= w; ++a) {
                for (int b = 0; a + b <= w; ++b) {
                    for (int c = 0; b + c <= h; ++c) {
                        for (int d = 0; c + d <= w && a + d <= h; ++d) {
                            if (2 * w * h - (a * a + b * b + c * c + d * d) != 16)
                                continue;
                            Polygon poly = detail::corner_cut_polygon(w, h, a, b, c, d);
                            std::vector<TriCell> cells = rasterize_polygon(poly);
                            std::string key = region_key(cells);
                            auto it = std::lower_bound(seen.begin(), seen.end(), key);
                            if (it != seen.end() && *it == key) continue;
                            seen.insert(it, key);
                            ShapeEntry e;
                            e.region = make_region(std::move(cells));
                            e.descriptor = {w, h, a, b, c, d};
                            e.key = key;
                            out.push_back(std::move(e));
                        }
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ShapeEntry& a, const ShapeEntry& b) { return a.key < b.key; });
    if (static_cast<int>(out.size()) != kCensusSize)
        throw data_error("convex census produced " + std::to_string(out.size()) +
                         " shapes, expected " + std::to_string(kCensusSize));
    return out;
}

inline bool classify_coverability(const ShapeEntry& entry, const TanSet& set) {
    return exists_partition(entry.region, set);
}

/// Fixed poses used by published figures; the strip machinery and the
/// numbering table validation are pinned to these.
inline Region j7_region() {  // tilted square, diagonal 4
    return region_from_polygon(polygon_units({{2, 0}, {4, 2}, {2, 4}, {0, 2}}), "J07");
}

inline Region j14_region() {  // 1 x 8 strip
    return region_from_polygon(polygon_units({{0, 0}, {8, 0}, {8, 1}, {0, 1}}), "J14");
}

inline Region j15_region() {  // isosceles trapezium, bases 9 and 7
    return region_from_polygon(polygon_units({{0, 0}, {9, 0}, {8, 1}, {1, 1}}), "J15");
}

inline Region j16_region() {  // parallelogram, base 8, offset 1
    return region_from_polygon(polygon_units({{0, 0}, {8, 0}, {9, 1}, {1, 1}}), "J16");
}

/// Table assigning numbers 1..16 to the coverable shapes' raster keys.
struct Numbering {
    std::array<std::string, kNumberedShapes> keys;  // index n-1 -> key

    const std::string& key_for(int number) const {
        if (number < 1 || number > kNumberedShapes)
            throw std::invalid_argument("shape number out of range: " +
                                        std::to_string(number));
        return keys[static_cast<std::size_t>(number - 1)];
    }
};

/// Display name of a numbered shape: J01..J16.
inline std::string shape_display_name(int number) {
    std::string s = "J";
    if (number < 10) s += '0';
    s += std::to_string(number);
    return s;
}

/// Parse and cross-check a numbering table. Format: one "<number> <key>"
/// pair per line; '#' starts a comment. Every number 1..16 exactly once,
/// keys distinct and present in the census, and the entries for 7 and
/// 14..16 must match the pinned poses above.
inline Numbering load_numbering(std::istream& in,
                                const std::vector<ShapeEntry>& census) {
    Numbering table;
    std::array<bool, kNumberedShapes> filled{};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (std::size_t hash = sv.find('#'); hash != std::string_view::npos)
            sv = sv.substr(0, hash);
        std::istringstream fields{std::string(sv)};
        int number = 0;
        std::string key;
        if (!(fields >> number)) continue;  // blank or comment-only line
        if (!(fields >> key))
            throw data_error("numbering line " + std::to_string(lineno) +
                             ": missing key");
        std::string extra;
        if (fields >> extra)
            throw data_error("numbering line " + std::to_string(lineno) +
                             ": trailing fields");
        if (number < 1 || number > kNumberedShapes)
            throw data_error("numbering line " + std::to_string(lineno) +
                             ": number out of range");
        if (filled[static_cast<std::size_t>(number - 1)])
            throw data_error("numbering: duplicate number " + std::to_string(number));
        filled[static_cast<std::size_t>(number - 1)] = true;
        table.keys[static_cast<std::size_t>(number - 1)] = key;
    }
    for (int n = 1; n <= kNumberedShapes; ++n)
        if (!filled[static_cast<std::size_t>(n - 1)])
            throw data_error("numbering: missing number " + std::to_string(n));
    std::vector<std::string> sorted(table.keys.begin(), table.keys.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw data_error("numbering: duplicate key");
    for (const std::string& key : table.keys) {
        bool known = false;
        for (const ShapeEntry& e : census) known = known || e.key == key;
        if (!known) throw data_error("numbering: key not in census: " + key);
    }
    const std::pair<int, Region> pins[] = {{7, j7_region()},
                                           {14, j14_region()},
                                           {15, j15_region()},
                                           {16, j16_region()}};
    for (const auto& [n, region] : pins)
        if (table.key_for(n) != region_key(region.cells))
            throw data_error("numbering: shape " + std::to_string(n) +
                             " does not match its pinned pose");
    return table;
}

inline Numbering load_numbering(const std::string& path,
                                const std::vector<ShapeEntry>& census) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open numbering file: " + path);
    return load_numbering(in, census);
}

inline void apply_numbering(std::vector<ShapeEntry>& census, const Numbering& table) {
    for (ShapeEntry& e : census) {
        e.number.reset();
        for (int n = 1; n <= kNumberedShapes; ++n)
            if (table.key_for(n) == e.key) e.number = n;
        if (e.number) e.region.name = shape_display_name(*e.number);
    }
}

inline const ShapeEntry& shape_by_number(int number,
                                         const std::vector<ShapeEntry>& census) {
    for (const ShapeEntry& e : census)
        if (e.number && *e.number == number) return e;
    throw std::invalid_argument("no census entry numbered " + std::to_string(number));
}

}  // namespace tangram
