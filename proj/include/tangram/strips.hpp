#pragma once
// Cut-and-paste structure of the one-row strip partitions. A finished
// 8x1 partition is crossed by full-height cut edges (vertical or
// diagonal). Splitting at the unique vertical cut and swapping the two
// parts pairs the partitions into twins; splitting at a skew cut and
// re-gluing the parts in reversed order yields a partition of one of
// the two slanted strips of the same area, the isosceles trapezoid when
// the front part is re-attached upside down and the parallelogram when
// it keeps its orientation.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tangram/canon.hpp"
#include "tangram/census.hpp"
#include "tangram/embed.hpp"
#include "tangram/solver.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

enum class CutKind : std::uint8_t { vertical, rise, fall };

inline std::string to_string(CutKind k) {
    switch (k) {
        case CutKind::vertical: return "vertical";
        case CutKind::rise: return "rise";
        case CutKind::fall: return "fall";
    }
    throw std::invalid_argument("to_string: bad cut kind");
}

/// A full-height cut of a strip partition. A vertical cut runs along
/// the grid line x; a skew cut runs along one diagonal of square x,
/// "rise" from (x, 0) to (x+1, 1) and "fall" from (x, 1) to (x+1, 0).
struct CutEdge {
    CutKind kind = CutKind::vertical;
    int x = 0;

    /// Left-to-right position: a vertical line sits on the grid line,
    /// a diagonal at the half-square after it.
    int position() const {
        return 2 * x + (kind == CutKind::vertical ? 0 : 1);
    }
    friend bool operator==(const CutEdge&, const CutEdge&) = default;
    friend bool operator<(const CutEdge& a, const CutEdge& b) {
        if (a.position() != b.position()) return a.position() < b.position();
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    }
};

inline std::ostream& operator<<(std::ostream& os, const CutEdge& c) {
    return os << to_string(c.kind) << '@' << c.x;
}

namespace detail {

inline void require_full_strip(const Region& region) {
    if (region.bounds.height != 1 ||
        region.cells.size() != static_cast<std::size_t>(4 * region.bounds.width))
        throw std::invalid_argument("strip operations need a full Wx1 region");
}

// true iff the cell lies on the left part when splitting at the cut
inline bool left_of_cut(const TriCell& c, const CutEdge& cut) {
    if (c.x != cut.x || cut.kind == CutKind::vertical) return c.x < cut.x;
    if (cut.kind == CutKind::rise)
        return c.q == Quadrant::W || c.q == Quadrant::N;
    return c.q == Quadrant::W || c.q == Quadrant::S;
}

// the split must respect piece boundaries: no placement may straddle
inline std::pair<std::vector<Placement>, std::vector<Placement>> split_at_cut(
    const Solution& sol, const CutEdge& cut) {
    std::pair<std::vector<Placement>, std::vector<Placement>> parts;
    for (const Placement& p : sol.placements) {
        int left = 0;
        for (const TriCell& c : p.cells) left += left_of_cut(c, cut);
        if (left != 0 && left != static_cast<int>(p.cells.size()))
            throw data_error("split_at_cut: a piece straddles the cut");
        (left ? parts.first : parts.second).push_back(p);
    }
    if (parts.first.empty() || parts.second.empty())
        throw data_error("split_at_cut: cut does not separate the strip");
    return parts;
}

// move the whole solution by a rigid motion, onto the target region
inline Solution reassembled(const std::vector<Placement>& placements,
                            const Region& target, const char* what) {
    Solution out;
    out.placements = placements;
    std::vector<TriCell> cells;
    for (const Placement& p : out.placements)
        cells.insert(cells.end(), p.cells.begin(), p.cells.end());
    std::sort(cells.begin(), cells.end());
    std::optional<Transform> g = find_congruence(cells, target.cells);
    if (!g) throw data_error(std::string("reassembly is not congruent to ") + what);
    return normalized(transformed(*g, out));
}

}  // namespace detail

/// All full-height cuts of a strip partition, left to right. A cut is a
/// straight segment from the bottom edge to the top edge that lies on
/// piece boundaries everywhere.
inline std::vector<CutEdge> cut_edges(const Solution& sol, const Region& region) {
    detail::require_full_strip(region);
    if (!is_exact_cover(sol, region))
        throw std::invalid_argument("cut_edges: placements do not tile the region");
    std::vector<int> owner(region.cells.size());
    for (std::size_t i = 0; i < sol.placements.size(); ++i)
        for (const TriCell& c : sol.placements[i].cells)
            owner[static_cast<std::size_t>(region_cell_rank(region, c))] =
                static_cast<int>(i);
    auto at = [&](int x, Quadrant q) {
        return owner[static_cast<std::size_t>(
            region_cell_rank(region, TriCell{x, 0, q}))];
    };
    std::vector<CutEdge> cuts;
    int w = region.bounds.width;
    for (int x = 1; x < w; ++x)
        if (at(x - 1, Quadrant::E) != at(x, Quadrant::W))
            cuts.push_back({CutKind::vertical, x});
    for (int x = 0; x < w; ++x) {
        if (at(x, Quadrant::W) != at(x, Quadrant::S) &&
            at(x, Quadrant::N) != at(x, Quadrant::E))
            cuts.push_back({CutKind::rise, x});
        if (at(x, Quadrant::W) != at(x, Quadrant::N) &&
            at(x, Quadrant::S) != at(x, Quadrant::E))
            cuts.push_back({CutKind::fall, x});
    }
    std::sort(cuts.begin(), cuts.end());
    return cuts;
}

/// The twin partition: split at the unique vertical cut and glue the
/// two parts back in swapped order. Twinning is an involution on the
/// strip partitions.
inline Solution twin_of(const Solution& sol, const Region& region) {
    detail::require_full_strip(region);
    std::vector<CutEdge> verticals;
    for (const CutEdge& c : cut_edges(sol, region))
        if (c.kind == CutKind::vertical) verticals.push_back(c);
    if (verticals.size() != 1)
        throw data_error("twin_of: expected exactly one vertical cut, found " +
                         std::to_string(verticals.size()));
    int v = verticals.front().x;
    int w = region.bounds.width;
    auto [left, right] = detail::split_at_cut(sol, verticals.front());
    Solution out;
    for (const Placement& p : right)
        out.placements.push_back({p.tan, p.instance, translated(p.cells, -v, 0)});
    for (const Placement& p : left)
        out.placements.push_back({p.tan, p.instance, translated(p.cells, w - v, 0)});
    return normalized(std::move(out));
}

/// The two strip partitions produced by cutting at a skew edge and
/// re-gluing in reversed order: `trapezoid` re-attaches the front part
/// upside down, `parallelogram` keeps its orientation. Both are mapped
/// onto the catalog poses of the slanted strips.
struct PastedStrips {
    Solution trapezoid;      // partition of the 9/7 isosceles trapezoid
    Solution parallelogram;  // partition of the slope-1 parallelogram
};

inline PastedStrips cut_and_paste(const Solution& sol, const Region& region,
                                  const CutEdge& cut) {
    detail::require_full_strip(region);
    if (cut.kind == CutKind::vertical)
        throw std::invalid_argument("cut_and_paste: needs a skew cut");
    int w = region.bounds.width;
    auto [left, right] = detail::split_at_cut(sol, cut);

    std::vector<Placement> same, flipped;
    for (const Placement& p : right) {
        Placement q{p.tan, p.instance, translated(p.cells, -cut.x, 0)};
        same.push_back(q);
        flipped.push_back(std::move(q));
    }
    // upside-down: x->x, y->-y, then lifted back into the row
    Transform flip{2, true, w - cut.x, 1};
    for (const Placement& p : left) {
        same.push_back({p.tan, p.instance, translated(p.cells, w - cut.x, 0)});
        flipped.push_back({p.tan, p.instance, transformed(flip, p.cells)});
    }
    PastedStrips out;
    out.trapezoid = detail::reassembled(flipped, j15_region(), "the trapezoid strip");
    out.parallelogram =
        detail::reassembled(same, j16_region(), "the parallelogram strip");
    return out;
}

/// Empirical check of the strip rearrangement theorem, run over the
/// complete enumeration of the 8x1 strip. Confirms the cut structure of
/// every partition, the twin pairing, that twins generate the same
/// pasted partitions cut for cut, and that cut-and-paste reaches the
/// complete partition sets of both slanted strips.
struct StripReport {
    long strip_labeled = 0;
    long strip_canonical = 0;
    bool cuts_ok = false;             // six cuts each: five skew, one vertical
    bool vertical_beside_square = false;  // square tan at an end, cut on its side
    int twin_pairs = 0;
    int twin_fixed_points = 0;
    bool twins_ok = false;            // involution, no fixed points
    bool twin_cuts_match = false;     // twins give identical pasted strips
    long trapezoid_generated = 0;
    long parallelogram_generated = 0;
    long trapezoid_direct = 0;
    long parallelogram_direct = 0;
    bool trapezoid_match = false;     // generated set == direct enumeration
    bool parallelogram_match = false;

    bool pass() const {
        return strip_canonical == 24 && cuts_ok && vertical_beside_square &&
               twins_ok && twin_fixed_points == 0 &&
               2 * twin_pairs == strip_canonical && twin_cuts_match &&
               trapezoid_generated == 60 && parallelogram_generated == 60 &&
               trapezoid_match && parallelogram_match;
    }
};

inline StripReport verify_strip_theorem() {
    StripReport r;
    const Region strip = j14_region();
    const Region trap = j15_region();
    const Region para = j16_region();
    const TanSet set = tan_set(SetKind::japanese);
    const int w = strip.bounds.width;

    std::vector<Solution> sols = enumerate_partitions(strip, set);
    r.strip_labeled = static_cast<long>(sols.size());
    std::vector<CanonicalSolution> canon = dedupe(sols, strip);
    r.strip_canonical = static_cast<long>(canon.size());

    std::set<std::string> canon_keys;
    for (const CanonicalSolution& c : canon) canon_keys.insert(c.key);

    r.cuts_ok = true;
    r.vertical_beside_square = true;
    r.twin_cuts_match = true;
    std::map<std::string, std::string> twin_key;
    std::set<std::string> trap_keys, para_keys;

    for (const CanonicalSolution& c : canon) {
        const Solution& sol = c.representative;
        std::vector<CutEdge> cuts = cut_edges(sol, strip);
        std::vector<CutEdge> skew;
        int verticals = 0;
        for (const CutEdge& cut : cuts) {
            if (cut.kind == CutKind::vertical)
                ++verticals;
            else
                skew.push_back(cut);
        }
        if (cuts.size() != 6 || verticals != 1 || skew.size() != 5)
            r.cuts_ok = false;

        const CutEdge* vcut = nullptr;
        for (const CutEdge& cut : cuts)
            if (cut.kind == CutKind::vertical) vcut = &cut;
        const Placement* square = nullptr;
        for (const Placement& p : sol.placements)
            if (p.tan == TanName::S) square = &p;
        if (!vcut || !square) {
            r.vertical_beside_square = false;
            continue;
        }
        int sx = square->cells.front().x;
        bool at_end = sx == 0 || sx == w - 1;
        if (!at_end || (vcut->x != sx && vcut->x != sx + 1))
            r.vertical_beside_square = false;

        Solution tw = twin_of(sol, strip);
        twin_key[c.key] = solution_key(tw, strip);

        // cut for cut: the twin's skew cuts sit at the translated spots
        // and paste to the same partitions
        std::vector<CutEdge> tw_cuts = cut_edges(tw, strip);
        for (const CutEdge& cut : skew) {
            int mapped = cut.x < vcut->x ? cut.x + (w - vcut->x) : cut.x - vcut->x;
            CutEdge tw_cut{cut.kind, mapped};
            if (std::find(tw_cuts.begin(), tw_cuts.end(), tw_cut) == tw_cuts.end()) {
                r.twin_cuts_match = false;
                continue;
            }
            PastedStrips a = cut_and_paste(sol, strip, cut);
            PastedStrips b = cut_and_paste(tw, strip, tw_cut);
            std::string ta = solution_key(a.trapezoid, trap);
            std::string pa = solution_key(a.parallelogram, para);
            if (ta != solution_key(b.trapezoid, trap) ||
                pa != solution_key(b.parallelogram, para))
                r.twin_cuts_match = false;
            trap_keys.insert(ta);
            para_keys.insert(pa);
        }
    }

    r.twins_ok = true;
    for (const auto& [key, tw] : twin_key) {
        if (tw == key) ++r.twin_fixed_points;
        auto back = twin_key.find(tw);
        if (!canon_keys.count(tw) || back == twin_key.end() || back->second != key)
            r.twins_ok = false;
    }
    r.twin_pairs = (static_cast<int>(twin_key.size()) - r.twin_fixed_points) / 2;

    r.trapezoid_generated = static_cast<long>(trap_keys.size());
    r.parallelogram_generated = static_cast<long>(para_keys.size());

    std::set<std::string> trap_direct, para_direct;
    for (const CanonicalSolution& c : dedupe(enumerate_partitions(trap, set), trap))
        trap_direct.insert(c.key);
    for (const CanonicalSolution& c : dedupe(enumerate_partitions(para, set), para))
        para_direct.insert(c.key);
    r.trapezoid_direct = static_cast<long>(trap_direct.size());
    r.parallelogram_direct = static_cast<long>(para_direct.size());
    r.trapezoid_match = trap_keys == trap_direct;
    r.parallelogram_match = para_keys == para_direct;
    return r;
}

}  // namespace tangram
