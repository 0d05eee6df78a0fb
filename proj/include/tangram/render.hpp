#pragma once
// Deterministic SVG rendering for regions, partitions, and contact
// sheets. Piece outlines come from exact boundary tracing on the
// quarter-square lattice, so repeated renders are byte-identical.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tangram/canon.hpp"
#include "tangram/census.hpp"
#include "tangram/embed.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

namespace detail {

// triangle corners of a cell, doubled coordinates, counterclockwise
inline std::array<P2, 3> cell_corners(const TriCell& c) {
    P2 center{2 * c.x + 1, 2 * c.y + 1};
    P2 bl{2 * c.x, 2 * c.y}, br{2 * c.x + 2, 2 * c.y};
    P2 tl{2 * c.x, 2 * c.y + 2}, tr{2 * c.x + 2, 2 * c.y + 2};
    switch (c.q) {
        case Quadrant::N: return {tr, tl, center};
        case Quadrant::E: return {br, tr, center};
        case Quadrant::S: return {bl, br, center};
        case Quadrant::W: return {tl, bl, center};
    }
    throw std::invalid_argument("cell_corners: bad quadrant");
}

inline std::pair<int, int> key_of(P2 p) { return {p.y, p.x}; }

}  // namespace detail

/// Outline of a cell set as a positively oriented polygon in doubled
/// coordinates. Interior edges cancel in pairs; the survivors must form
/// one simple loop (true for every tan and every convex region).
/// Collinear runs are merged, and the walk starts at the smallest
/// vertex by (y, x), so equal cell sets trace equal polygons.
inline Polygon trace_boundary(const std::vector<TriCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("trace_boundary: empty set");
    using VKey = std::pair<int, int>;
    std::map<std::pair<VKey, VKey>, int> count;
    for (const TriCell& c : cells)
        for (int i = 0; i < 3; ++i) {
            P2 a = detail::cell_corners(c)[static_cast<std::size_t>(i)];
            P2 b = detail::cell_corners(c)[static_cast<std::size_t>((i + 1) % 3)];
            VKey ka = detail::key_of(a), kb = detail::key_of(b);
            ++count[{std::min(ka, kb), std::max(ka, kb)}];
        }
    std::map<VKey, std::vector<VKey>> adj;
    for (const auto& [edge, n] : count) {
        if (n > 2) throw data_error("trace_boundary: overlapping cells");
        if (n != 1) continue;
        adj[edge.first].push_back(edge.second);
        adj[edge.second].push_back(edge.first);
    }
    if (adj.empty()) throw data_error("trace_boundary: no boundary edges");
    for (auto& [v, nb] : adj) {
        if (nb.size() != 2)
            throw data_error("trace_boundary: boundary is not a single loop");
        std::sort(nb.begin(), nb.end());
    }
    VKey start = adj.begin()->first;
    std::vector<VKey> loop{start, adj[start].front()};
    while (loop.back() != start) {
        const auto& nb = adj[loop.back()];
        VKey prev = loop[loop.size() - 2];
        loop.push_back(nb[0] == prev ? nb[1] : nb[0]);
    }
    loop.pop_back();
    if (loop.size() != adj.size())
        throw data_error("trace_boundary: boundary is not a single loop");

    Polygon poly;
    poly.reserve(loop.size());
    for (const VKey& v : loop) poly.push_back({v.second, v.first});
    if (shoelace_doubled(poly) < 0) std::reverse(poly.begin() + 1, poly.end());

    Polygon merged;
    std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
        P2 a = poly[(i + n - 1) % n], b = poly[i], c = poly[(i + 1) % n];
        long long cross = static_cast<long long>(b.x - a.x) * (c.y - b.y) -
                          static_cast<long long>(b.y - a.y) * (c.x - b.x);
        if (cross != 0) merged.push_back(b);
    }
    return merged;
}

/// Rendering knobs. `scale` is pixels per unit square; every emitted
/// coordinate is an exact multiple of half a pixel.
struct Style {
    int scale = 40;
    bool grid = false;
    bool labels = false;
    bool colored = true;
};

inline const char* tan_color(TanName t) {
    switch (t) {
        case TanName::Ts: return "#e41a1c";
        case TanName::S: return "#377eb8";
        case TanName::P: return "#4daf4a";
        case TanName::Tm: return "#984ea3";
        case TanName::Tb: return "#ff7f00";
        case TanName::Tr: return "#a65628";
        case TanName::Tz: return "#f781bf";
    }
    throw std::invalid_argument("tan_color: bad tan");
}

namespace detail {

// value measured in half pixels, printed as pixels
inline std::string half_px(long long hp) {
    long long mag = hp < 0 ? -hp : hp;
    std::string s = (hp < 0 ? "-" : "") + std::to_string(mag / 2);
    if (mag % 2 != 0) s += ".5";
    return s;
}

// drawing context: doubled lattice coordinates to pixel text, y up
struct Canvas {
    int scale = 40;
    int margin_px = 20;
    int height_units = 0;  // for the y flip

    std::string x(int doubled) const {
        return half_px(2LL * margin_px + static_cast<long long>(doubled) * scale);
    }
    std::string y(int doubled) const {
        return half_px(2LL * margin_px +
                       static_cast<long long>(2 * height_units - doubled) * scale);
    }
    // label anchor from a centroid in sixths (rounds toward zero)
    std::string x6(long long sixths) const {
        return half_px((6LL * margin_px + sixths * scale) / 3);
    }
    std::string y6(long long sixths) const {
        return half_px((6LL * margin_px + (6LL * height_units - sixths) * scale) / 3);
    }
    int panel_width(const Bounds& b) const {
        return b.width * scale + 2 * margin_px;
    }
    int panel_height(const Bounds& b) const {
        return b.height * scale + 2 * margin_px;
    }
};

inline std::string svg_points(const Polygon& poly, const Canvas& cv) {
    std::string out;
    for (const P2& p : poly) {
        if (!out.empty()) out += ' ';
        out += cv.x(p.x) + ',' + cv.y(p.y);
    }
    return out;
}

inline void append_grid(std::string& out, const Bounds& b, const Canvas& cv) {
    for (int gx = 0; gx <= b.width; ++gx)
        out += "  <line x1=\"" + cv.x(2 * gx) + "\" y1=\"" + cv.y(0) +
               "\" x2=\"" + cv.x(2 * gx) + "\" y2=\"" + cv.y(2 * b.height) +
               "\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";
    for (int gy = 0; gy <= b.height; ++gy)
        out += "  <line x1=\"" + cv.x(0) + "\" y1=\"" + cv.y(2 * gy) +
               "\" x2=\"" + cv.x(2 * b.width) + "\" y2=\"" + cv.y(2 * gy) +
               "\" stroke=\"#d8d8d8\" stroke-width=\"1\"/>\n";
}

// panel body shared by the single renders and the sheets
inline void append_panel(std::string& out, const Region& region,
                         const Solution* sol, const Style& style,
                         const Canvas& cv) {
    if (style.grid) append_grid(out, region.bounds, cv);
    std::string piece_stroke = half_px(std::max(2, cv.scale / 10));
    std::string outline_stroke = half_px(std::max(3, cv.scale / 8));
    if (sol) {
        for (const Placement& p : sol->placements) {
            const char* fill = style.colored ? tan_color(p.tan) : "#ffffff";
            out += "  <polygon points=\"" + svg_points(trace_boundary(p.cells), cv) +
                   "\" fill=\"" + fill + "\" fill-opacity=\"0.85\" stroke=\"#222222\"" +
                   " stroke-width=\"" + piece_stroke +
                   "\" stroke-linejoin=\"round\"/>\n";
        }
    }
    out += "  <polygon points=\"" + svg_points(trace_boundary(region.cells), cv) +
           "\" fill=\"" + std::string(sol ? "none" : "#f0f0f0") +
           "\" stroke=\"#000000\" stroke-width=\"" + outline_stroke +
           "\" stroke-linejoin=\"round\"/>\n";
    if (sol && style.labels) {
        int font = std::max(8, (2 * cv.scale) / 5);
        for (const Placement& p : sol->placements) {
            long long sx = 0, sy = 0;
            for (const TriCell& c : p.cells) {
                auto [cx, cy] = centroid_sixths(c);
                sx += cx;
                sy += cy;
            }
            long long k = static_cast<long long>(p.cells.size());
            out += "  <text x=\"" + cv.x6(sx / k) + "\" y=\"" + cv.y6(sy / k) +
                   "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"" +
                   std::to_string(font) +
                   "\" text-anchor=\"middle\" dominant-baseline=\"central\"" +
                   " fill=\"#111111\">" + std::string(to_string(p.tan)) +
                   "</text>\n";
        }
    }
}

inline std::string svg_document(int width, int height, const std::string& body) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) +
           "\" viewBox=\"0 0 " + std::to_string(width) + ' ' +
           std::to_string(height) + "\">\n" + body + "</svg>\n";
}

}  // namespace detail

/// One region, outline and optional grid.
inline std::string render_region(const Region& region, const Style& style = {}) {
    detail::Canvas cv{style.scale, style.scale / 2, region.bounds.height};
    std::string body;
    detail::append_panel(body, region, nullptr, style, cv);
    return detail::svg_document(cv.panel_width(region.bounds),
                                cv.panel_height(region.bounds), body);
}

/// One partition of a region.
inline std::string render_solution(const Region& region, const Solution& sol,
                                   const Style& style = {}) {
    if (!is_exact_cover(sol, region))
        throw std::invalid_argument("render_solution: placements do not tile the region");
    detail::Canvas cv{style.scale, style.scale / 2, region.bounds.height};
    std::string body;
    detail::append_panel(body, region, &sol, style, cv);
    return detail::svg_document(cv.panel_width(region.bounds),
                                cv.panel_height(region.bounds), body);
}

/// Contact sheet of partitions in reading order, each panel captioned
/// with its 1-based index. Pass the partitions already in the order to
/// be shown (for example sorted by canonical key).
inline std::string render_sheet(const Region& region,
                                const std::vector<Solution>& sols,
                                const Style& style = {}, int columns = 6) {
    if (columns < 1) throw std::invalid_argument("render_sheet: columns < 1");
    detail::Canvas cv{style.scale, style.scale / 2, region.bounds.height};
    int caption = std::max(12, (3 * style.scale) / 5);
    int pw = cv.panel_width(region.bounds);
    int ph = cv.panel_height(region.bounds) + caption;
    int n = static_cast<int>(sols.size());
    int cols = std::min(columns, std::max(1, n));
    int rows = (n + cols - 1) / cols;
    std::string body;
    for (int i = 0; i < n; ++i) {
        int px = (i % cols) * pw;
        int py = (i / cols) * ph + caption;
        body += "<g transform=\"translate(" + std::to_string(px) + ' ' +
                std::to_string(py) + ")\">\n";
        body += "  <text x=\"" + std::to_string(cv.margin_px) + "\" y=\"" +
                std::to_string(-caption / 4) +
                "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"" +
                std::to_string((2 * caption) / 3) + "\" fill=\"#333333\">#" +
                std::to_string(i + 1) + "</text>\n";
        detail::append_panel(body, region, &sols[i], style, cv);
        body += "</g>\n";
    }
    return detail::svg_document(std::max(1, cols) * pw,
                                std::max(1, rows) * ph, body);
}

/// Contact sheet of the whole shape catalog. Panels are captioned with
/// the shape name (or its raster key when unnamed) and a coverability
/// badge per tan set, J for the seven-piece set with the two slanted
/// triangles, C for the classic set.
inline std::string render_catalog(
    const std::vector<ShapeEntry>& census,
    const std::vector<std::pair<bool, bool>>& coverable,
    const Style& style = {}, int columns = 4) {
    if (census.size() != coverable.size())
        throw std::invalid_argument("render_catalog: one flag pair per shape");
    if (columns < 1) throw std::invalid_argument("render_catalog: columns < 1");
    int caption = std::max(14, (3 * style.scale) / 5);
    int pw = 0, ph = 0;
    for (const ShapeEntry& e : census) {
        detail::Canvas cv{style.scale, style.scale / 2, 0};
        pw = std::max(pw, cv.panel_width(e.region.bounds));
        ph = std::max(ph, cv.panel_height(e.region.bounds) + caption);
    }
    int n = static_cast<int>(census.size());
    int cols = std::min(columns, std::max(1, n));
    int rows = (n + cols - 1) / cols;
    std::string body;
    for (int i = 0; i < n; ++i) {
        const ShapeEntry& e = census[static_cast<std::size_t>(i)];
        detail::Canvas cv{style.scale, style.scale / 2, e.region.bounds.height};
        int px = (i % cols) * pw;
        int py = (i / cols) * ph + caption;
        std::string name = e.number ? shape_display_name(*e.number) : e.key;
        std::string badge;
        badge += coverable[static_cast<std::size_t>(i)].first ? 'J' : '-';
        badge += coverable[static_cast<std::size_t>(i)].second ? 'C' : '-';
        body += "<g transform=\"translate(" + std::to_string(px) + ' ' +
                std::to_string(py) + ")\">\n";
        body += "  <text x=\"" + std::to_string(cv.margin_px) + "\" y=\"" +
                std::to_string(-caption / 4) +
                "\" font-family=\"Helvetica, Arial, sans-serif\" font-size=\"" +
                std::to_string((2 * caption) / 3) + "\" fill=\"#333333\">" + name +
                " [" + badge + "]</text>\n";
        detail::append_panel(body, e.region, nullptr, style, cv);
        body += "</g>\n";
    }
    return detail::svg_document(std::max(1, cols) * pw,
                                std::max(1, rows) * ph, body);
}

}  // namespace tangram
