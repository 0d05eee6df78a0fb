#pragma once

// Quarter-square triangle lattice: cells, rigid congruences, exact polygon
// rasterization, and region symmetries. All geometry is exact: boundary
// points carry doubled integer coordinates, cell centroids sixths.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tangram {

/// Integrity failure in data that must be internally consistent
/// (census size, numbering files, strip reassembly).
struct data_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Quadrant of a unit square, named by compass direction from its center.
enum class Quadrant : std::uint8_t { N = 0, E = 1, S = 2, W = 3 };

inline char quadrant_name(Quadrant q) { return "NESW"[static_cast<int>(q)]; }

/// One quarter-square triangle: quadrant q of the unit square with
/// lower-left corner (x, y). Area is exactly 1/4 square unit; a full
/// seven-tan set covers 32 of these cells.
struct TriCell {
    int x = 0;
    int y = 0;
    Quadrant q = Quadrant::N;

    friend bool operator==(const TriCell&, const TriCell&) = default;
    /// Row-major by (y, x), then N,E,S,W; agrees with cell_index order.
    friend std::strong_ordering operator<=>(const TriCell& a, const TriCell& b) {
        if (auto c = a.y <=> b.y; c != 0) return c;
        if (auto c = a.x <=> b.x; c != 0) return c;
        return static_cast<int>(a.q) <=> static_cast<int>(b.q);
    }
};

inline std::ostream& operator<<(std::ostream& os, const TriCell& c) {
    return os << '(' << c.x << ',' << c.y << ',' << quadrant_name(c.q) << ')';
}

/// Lattice point in doubled coordinates: P2{2a, 2b} is the point (a, b).
/// Square corners are (even, even), square centers (odd, odd).
struct P2 {
    int x = 0;
    int y = 0;
    friend bool operator==(const P2&, const P2&) = default;
    friend auto operator<=>(const P2&, const P2&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const P2& p) {
    return os << '[' << p.x << '/' << '2' << ',' << p.y << '/' << '2' << ']';
}

/// Simple polygon, positively oriented, doubled coordinates.
using Polygon = std::vector<P2>;

/// Polygon from whole-unit vertices.
inline Polygon polygon_units(std::initializer_list<std::pair<int, int>> pts) {
    Polygon p;
    p.reserve(pts.size());
    for (auto [x, y] : pts) p.push_back({2 * x, 2 * y});
    return p;
}

/// Rigid congruence of the lattice. Applied as: mirror across the
/// vertical axis (if set), then rot quarter-turns counterclockwise
/// about the origin, then translation by whole squares (dx, dy).
struct Transform {
    int rot = 0;  // 0..3 quarter turns, counterclockwise
    bool mirror = false;
    int dx = 0;
    int dy = 0;
    friend bool operator==(const Transform&, const Transform&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Transform& t) {
    return os << "{rot" << t.rot * 90 << (t.mirror ? "*" : "") << ",+(" << t.dx
              << ',' << t.dy << ")}";
}

/// The 8 point-group elements (dihedral group of the square), zero
/// translation: rotations first, then their mirrored counterparts.
inline const std::array<Transform, 8>& point_group() {
    static const std::array<Transform, 8> g = {
        Transform{0, false, 0, 0}, Transform{1, false, 0, 0},
        Transform{2, false, 0, 0}, Transform{3, false, 0, 0},
        Transform{0, true, 0, 0},  Transform{1, true, 0, 0},
        Transform{2, true, 0, 0},  Transform{3, true, 0, 0}};
    return g;
}

namespace detail {

// Linear part of a transform on an integer point (any uniform scale).
inline std::pair<long long, long long> linear(const Transform& t, long long x,
                                              long long y) {
    if (t.mirror) x = -x;
    for (int i = 0; i < t.rot; ++i) {
        long long nx = -y;
        y = x;
        x = nx;
    }
    return {x, y};
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    return (a % b != 0 && (a < 0) != (b < 0)) ? q - 1 : q;
}

}  // namespace detail

/// Image of a doubled-coordinate point.
inline P2 transformed(const Transform& t, P2 p) {
    auto [x, y] = detail::linear(t, p.x, p.y);
    return {static_cast<int>(x) + 2 * t.dx, static_cast<int>(y) + 2 * t.dy};
}

/// Centroid of a cell in sixth coordinates.
inline std::pair<long long, long long> centroid_sixths(const TriCell& c) {
    static constexpr int off[4][2] = {{3, 5}, {5, 3}, {3, 1}, {1, 3}};  // N,E,S,W
    return {6LL * c.x + off[static_cast<int>(c.q)][0],
            6LL * c.y + off[static_cast<int>(c.q)][1]};
}

/// Image of a cell: map its centroid exactly and locate the containing
/// quadrant. Total, and bijective for any fixed transform.
inline TriCell transformed(const Transform& t, const TriCell& c) {
    auto [cx, cy] = centroid_sixths(c);
    auto [px, py] = detail::linear(t, cx, cy);
    px += 6LL * t.dx;
    py += 6LL * t.dy;
    long long sx = detail::floor_div(px, 6);
    long long sy = detail::floor_div(py, 6);
    int rx = static_cast<int>(px - 6 * sx);
    int ry = static_cast<int>(py - 6 * sy);
    Quadrant q;
    if (rx == 3 && ry == 5) {
        q = Quadrant::N;
    } else if (rx == 5 && ry == 3) {
        q = Quadrant::E;
    } else if (rx == 3 && ry == 1) {
        q = Quadrant::S;
    } else if (rx == 1 && ry == 3) {
        q = Quadrant::W;
    } else {
        throw data_error("apply: transformed centroid left the centroid lattice");
    }
    return {static_cast<int>(sx), static_cast<int>(sy), q};
}

inline std::vector<TriCell> transformed(const Transform& t,
                                  const std::vector<TriCell>& cells) {
    std::vector<TriCell> out;
    out.reserve(cells.size());
    for (const TriCell& c : cells) out.push_back(transformed(t, c));
    std::sort(out.begin(), out.end());
    return out;
}

/// Composition a after b: transformed(compose(a, b), p) == transformed(a, transformed(b, p)).
inline Transform compose(const Transform& a, const Transform& b) {
    Transform r;
    if (a.mirror) {
        r.rot = ((a.rot - b.rot) % 4 + 4) % 4;
        r.mirror = !b.mirror;
    } else {
        r.rot = (a.rot + b.rot) % 4;
        r.mirror = b.mirror;
    }
    auto [tx, ty] = detail::linear(a, b.dx, b.dy);
    r.dx = static_cast<int>(tx) + a.dx;
    r.dy = static_cast<int>(ty) + a.dy;
    return r;
}

inline Transform inverse(const Transform& t) {
    Transform inv;
    inv.mirror = t.mirror;
    inv.rot = t.mirror ? t.rot : (4 - t.rot) % 4;
    auto [x, y] = detail::linear(inv, t.dx, t.dy);
    inv.dx = -static_cast<int>(x);
    inv.dy = -static_cast<int>(y);
    return inv;
}

/// Whole-square bounding box, anchored at the origin.
struct Bounds {
    int width = 0;
    int height = 0;
    friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Bijection of in-bounds cells onto 0..4*W*H-1: row-major by (y, x),
/// then quadrant order N,E,S,W. Stable across runs.
inline int cell_index(const TriCell& c, const Bounds& b) {
    if (c.x < 0 || c.y < 0 || c.x >= b.width || c.y >= b.height)
        throw std::invalid_argument("cell_index: cell outside bounds");
    return (c.y * b.width + c.x) * 4 + static_cast<int>(c.q);
}

inline TriCell cell_at_index(int index, const Bounds& b) {
    if (index < 0 || index >= 4 * b.width * b.height)
        throw std::invalid_argument("cell_at_index: index outside bounds");
    int sq = index / 4;
    return {sq % b.width, sq / b.width, static_cast<Quadrant>(index % 4)};
}

/// Min-corner (x, y) of the squares touched by a nonempty cell set.
inline std::pair<int, int> cell_anchor(const std::vector<TriCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("cell_anchor: empty cell set");
    int mx = cells.front().x, my = cells.front().y;
    for (const TriCell& c : cells) {
        mx = std::min(mx, c.x);
        my = std::min(my, c.y);
    }
    return {mx, my};
}

inline std::vector<TriCell> translated(const std::vector<TriCell>& cells, int dx,
                                       int dy) {
    std::vector<TriCell> out;
    out.reserve(cells.size());
    for (const TriCell& c : cells) out.push_back({c.x + dx, c.y + dy, c.q});
    std::sort(out.begin(), out.end());
    return out;
}

/// Translate so the bounding box min-corner sits at the origin.
inline std::vector<TriCell> anchored(const std::vector<TriCell>& cells) {
    auto [mx, my] = cell_anchor(cells);
    return translated(cells, -mx, -my);
}

/// The three edge-neighbours of a cell: two within its square, one across
/// the square boundary.
inline std::array<TriCell, 3> neighbours(const TriCell& c) {
    switch (c.q) {
        case Quadrant::N:
            return {TriCell{c.x, c.y, Quadrant::E}, {c.x, c.y, Quadrant::W},
                    {c.x, c.y + 1, Quadrant::S}};
        case Quadrant::E:
            return {TriCell{c.x, c.y, Quadrant::N}, {c.x, c.y, Quadrant::S},
                    {c.x + 1, c.y, Quadrant::W}};
        case Quadrant::S:
            return {TriCell{c.x, c.y, Quadrant::E}, {c.x, c.y, Quadrant::W},
                    {c.x, c.y - 1, Quadrant::N}};
        default:
            return {TriCell{c.x, c.y, Quadrant::N}, {c.x, c.y, Quadrant::S},
                    {c.x - 1, c.y, Quadrant::E}};
    }
}

inline bool is_edge_connected(const std::vector<TriCell>& cells) {
    if (cells.empty()) return false;
    std::vector<TriCell> sorted = cells;
    std::sort(sorted.begin(), sorted.end());
    auto member = [&](const TriCell& c) {
        return std::binary_search(sorted.begin(), sorted.end(), c);
    };
    std::vector<TriCell> stack{sorted.front()};
    std::vector<TriCell> seen{sorted.front()};
    while (!stack.empty()) {
        TriCell c = stack.back();
        stack.pop_back();
        for (const TriCell& n : neighbours(c)) {
            if (!member(n)) continue;
            auto it = std::lower_bound(seen.begin(), seen.end(), n);
            if (it != seen.end() && *it == n) continue;
            seen.insert(it, n);
            stack.push_back(n);
        }
    }
    return seen.size() == sorted.size();
}

/// Twice the signed area of a doubled-coordinate polygon, i.e. 8x the
/// area in square units. Positive for counterclockwise orientation.
inline long long shoelace_doubled(const Polygon& poly) {
    long long s = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& a = poly[i];
        const P2& b = poly[(i + 1) % poly.size()];
        s += static_cast<long long>(a.x) * b.y - static_cast<long long>(b.x) * a.y;
    }
    return s;
}

/// Polygon area in quarter-square cells. Requires positive orientation.
inline int polygon_area_cells(const Polygon& poly) {
    long long s = shoelace_doubled(poly);
    if (s <= 0) throw std::invalid_argument("polygon must be positively oriented");
    if (s % 2 != 0) throw std::invalid_argument("polygon area is not a whole number of cells");
    return static_cast<int>(s / 2);
}

namespace detail {

// Every edge must run along cell boundary segments: axis-aligned on a
// whole-unit grid line, or diagonal on a corner-to-center lattice line.
inline void validate_lattice_edges(const Polygon& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const P2& a = poly[i];
        const P2& b = poly[(i + 1) % poly.size()];
        int dx = b.x - a.x, dy = b.y - a.y;
        if (dx == 0 && dy == 0)
            throw std::invalid_argument("polygon has a repeated vertex");
        if (dy == 0) {
            if (a.y % 2 != 0)
                throw std::invalid_argument("horizontal edge off the unit grid");
        } else if (dx == 0) {
            if (a.x % 2 != 0)
                throw std::invalid_argument("vertical edge off the unit grid");
        } else if (dx == dy) {
            if (((a.x - a.y) % 2 + 2) % 2 != 0)
                throw std::invalid_argument("diagonal edge off the lattice");
        } else if (dx == -dy) {
            if (((a.x + a.y) % 2 + 2) % 2 != 0)
                throw std::invalid_argument("diagonal edge off the lattice");
        } else {
            throw std::invalid_argument("edge direction is not a multiple of 45 degrees");
        }
    }
}

// Winding number of point p (sixth coordinates) w.r.t. poly scaled to
// sixths; p must not lie on the boundary.
inline bool point_in_polygon_sixths(long long px, long long py,
                                    const Polygon& poly) {
    int wn = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        long long ax = 3LL * poly[i].x, ay = 3LL * poly[i].y;
        long long bx = 3LL * poly[(i + 1) % poly.size()].x,
                  by = 3LL * poly[(i + 1) % poly.size()].y;
        auto is_left = (bx - ax) * (py - ay) - (px - ax) * (by - ay);
        if (ay <= py) {
            if (by > py && is_left > 0) ++wn;
        } else {
            if (by <= py && is_left < 0) --wn;
        }
    }
    return wn != 0;
}

}  // namespace detail

/// Cells whose centroids lie inside the polygon. The polygon must be
/// simple, positively oriented, with every edge along cell boundaries;
/// malformed shapes are rejected.
inline std::vector<TriCell> rasterize_polygon(const Polygon& poly) {
    if (poly.size() < 3) throw std::invalid_argument("polygon needs >= 3 vertices");
    detail::validate_lattice_edges(poly);
    int cells_expected = polygon_area_cells(poly);

    int min_x = poly[0].x, max_x = poly[0].x, min_y = poly[0].y, max_y = poly[0].y;
    for (const P2& p : poly) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    int sx0 = static_cast<int>(detail::floor_div(min_x, 2));
    int sx1 = static_cast<int>(detail::floor_div(max_x + 1, 2));
    int sy0 = static_cast<int>(detail::floor_div(min_y, 2));
    int sy1 = static_cast<int>(detail::floor_div(max_y + 1, 2));

    std::vector<TriCell> out;
    for (int y = sy0; y <= sy1; ++y) {
        for (int x = sx0; x <= sx1; ++x) {
            for (int qi = 0; qi < 4; ++qi) {
                TriCell c{x, y, static_cast<Quadrant>(qi)};
                auto [cx, cy] = centroid_sixths(c);
                if (detail::point_in_polygon_sixths(cx, cy, poly)) out.push_back(c);
            }
        }
    }
    std::sort(out.begin(), out.end());
    if (static_cast<int>(out.size()) != cells_expected)
        throw data_error("rasterize_polygon: raster does not tile the polygon");
    return out;
}

/// A congruence carrying the cell set onto the target, if one exists.
/// The target must be sorted and anchored at the origin.
inline std::optional<Transform> find_congruence(const std::vector<TriCell>& cells,
                                                const std::vector<TriCell>& target) {
    if (cells.empty() || cells.size() != target.size()) return std::nullopt;
    for (const Transform& g : point_group()) {
        std::vector<TriCell> img = transformed(g, cells);
        auto [ix, iy] = cell_anchor(img);
        if (translated(img, -ix, -iy) == target)
            return Transform{g.rot, g.mirror, -ix, -iy};
    }
    return std::nullopt;
}

/// All congruences (point-group element plus the unique compatible
/// translation) mapping the cell set onto itself. Contains the identity
/// and is closed under composition and inverse.
inline std::vector<Transform> region_symmetries(const std::vector<TriCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("region_symmetries: empty set");
    std::vector<TriCell> base = cells;
    std::sort(base.begin(), base.end());
    auto [ax, ay] = cell_anchor(base);
    std::vector<Transform> out;
    for (const Transform& g : point_group()) {
        std::vector<TriCell> img = transformed(g, base);
        auto [ix, iy] = cell_anchor(img);
        Transform full{g.rot, g.mirror, ax - ix, ay - iy};
        if (translated(img, ax - ix, ay - iy) == base) out.push_back(full);
    }
    return out;
}

/// A target shape: anchored cell set with its symmetry group.
struct Region {
    std::string name;
    Bounds bounds;
    std::vector<TriCell> cells;  // sorted, anchored at the origin
    std::vector<Transform> symmetries;
};

inline Region make_region(std::vector<TriCell> cells, std::string name = "") {
    if (cells.empty()) throw std::invalid_argument("make_region: empty cell set");
    cells = anchored(cells);
    Region r;
    r.name = std::move(name);
    r.cells = std::move(cells);
    int w = 0, h = 0;
    for (const TriCell& c : r.cells) {
        w = std::max(w, c.x + 1);
        h = std::max(h, c.y + 1);
    }
    r.bounds = {w, h};
    r.symmetries = region_symmetries(r.cells);
    return r;
}

inline Region region_from_polygon(const Polygon& poly, std::string name = "") {
    return make_region(rasterize_polygon(poly), std::move(name));
}

}  // namespace tangram
