#pragma once

// Oriented variants of a tan, their translated embeddings into a region,
// and the per-cell cover index the solver branches on. Embeddings carry
// 64-bit occupancy masks whose bit positions are ranks in the region's
// sorted cell list (not bounding-box indices: a slanted shape can spill
// over 64 box positions while holding only 32 cells). Regions are
// therefore capped at 64 cells, double a full tan set.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

using CellMask = std::uint64_t;

inline constexpr int kMaxIndexedCells = 64;

/// A distinct pose of a tan under rotation (and optionally reflection),
/// anchored at the origin. `transform` is one point-group element that
/// produces the pose from the canonical polygon.
struct OrientedVariant {
    TanName tan = TanName::Ts;
    Transform transform;
    std::vector<TriCell> cells;  // sorted, anchored
};

/// Distinct poses in point-group order, first producer wins. With
/// reflections the seven kinds yield 4,1,4,4,4,8,4 variants.
inline std::vector<OrientedVariant> orientations(const Tan& tan,
                                                 bool allow_reflection = true) {
    std::vector<OrientedVariant> out;
    for (const Transform& g : point_group()) {
        if (g.mirror && !allow_reflection) continue;
        std::vector<TriCell> img = anchored(transformed(g, tan.cells));
        bool dup = false;
        for (const OrientedVariant& v : out) dup = dup || v.cells == img;
        if (!dup) out.push_back({tan.name, g, std::move(img)});
    }
    return out;
}

/// Rank of a cell in the region's sorted cell list, or -1 if absent.
inline int region_cell_rank(const Region& r, const TriCell& c) {
    auto it = std::lower_bound(r.cells.begin(), r.cells.end(), c);
    if (it == r.cells.end() || *it != c) return -1;
    return static_cast<int>(it - r.cells.begin());
}

inline CellMask cells_to_mask(const std::vector<TriCell>& cells, const Region& r) {
    if (r.cells.size() > kMaxIndexedCells)
        throw data_error("region too large for a 64-cell occupancy mask");
    CellMask m = 0;
    for (const TriCell& c : cells) {
        int rank = region_cell_rank(r, c);
        if (rank < 0)
            throw std::invalid_argument("cells_to_mask: cell outside the region");
        m |= CellMask{1} << rank;
    }
    return m;
}

inline CellMask region_mask(const Region& r) {
    if (r.cells.size() > kMaxIndexedCells)
        throw data_error("region too large for a 64-cell occupancy mask");
    std::size_t n = r.cells.size();
    return n == kMaxIndexedCells ? ~CellMask{0} : (CellMask{1} << n) - 1;
}

/// One concrete placement candidate of a tan inside a region.
struct Embedding {
    TanName tan = TanName::Ts;
    int variant = 0;             // index into orientations(tan)
    std::vector<TriCell> cells;  // sorted, absolute region coordinates
    CellMask mask = 0;
};

/// All embeddings of one tan into the region, ordered by variant then
/// anchor (row-major). Containment is exact: every cell must land on a
/// region cell.
inline std::vector<Embedding> tan_embeddings(const Tan& tan, const Region& region,
                                             bool allow_reflection = true) {
    region_mask(region);  // enforce the 64-cell cap up front
    std::vector<Embedding> out;
    std::vector<OrientedVariant> vars = orientations(tan, allow_reflection);
    for (std::size_t vi = 0; vi < vars.size(); ++vi) {
        const OrientedVariant& v = vars[vi];
        int vw = 0, vh = 0;
        for (const TriCell& c : v.cells) {
            vw = std::max(vw, c.x + 1);
            vh = std::max(vh, c.y + 1);
        }
        for (int dy = 0; dy + vh <= region.bounds.height; ++dy) {
            for (int dx = 0; dx + vw <= region.bounds.width; ++dx) {
                std::vector<TriCell> cells = translated(v.cells, dx, dy);
                CellMask m = 0;
                bool inside = true;
                for (const TriCell& c : cells) {
                    int rank = region_cell_rank(region, c);
                    if (rank < 0) {
                        inside = false;
                        break;
                    }
                    m |= CellMask{1} << rank;
                }
                if (!inside) continue;
                out.push_back({tan.name, static_cast<int>(vi), std::move(cells), m});
            }
        }
    }
    return out;
}

/// Embeddings for a whole set, in set order. Multiplicity does not
/// duplicate entries; the solver tracks remaining copies separately.
inline std::vector<Embedding> all_embeddings(const TanSet& set, const Region& region,
                                             bool allow_reflection = true) {
    std::vector<Embedding> out;
    for (const Tan& t : set.tans) {
        std::vector<Embedding> e = tan_embeddings(t, region, allow_reflection);
        out.insert(out.end(), std::make_move_iterator(e.begin()),
                   std::make_move_iterator(e.end()));
    }
    return out;
}

/// For each region cell (by rank), the embeddings covering it.
struct CoverIndex {
    std::vector<std::vector<std::int32_t>> by_cell;
};

inline CoverIndex build_cover_index(const std::vector<Embedding>& embeddings,
                                    const Region& region) {
    CoverIndex idx;
    idx.by_cell.resize(region.cells.size());
    for (std::size_t i = 0; i < embeddings.size(); ++i) {
        for (const TriCell& c : embeddings[i].cells) {
            int rank = region_cell_rank(region, c);
            if (rank < 0)
                throw std::invalid_argument("build_cover_index: embedding leaves the region");
            idx.by_cell[static_cast<std::size_t>(rank)].push_back(
                static_cast<std::int32_t>(i));
        }
    }
    return idx;
}

/// A placed tan in a finished partition. `instance` separates copies of
/// the same kind (0-based, assigned in placement order after sorting).
struct Placement {
    TanName tan = TanName::Ts;
    int instance = 0;
    std::vector<TriCell> cells;  // sorted, absolute region coordinates

    friend bool operator==(const Placement&, const Placement&) = default;
};

struct Solution {
    std::vector<Placement> placements;
};

/// True iff the placements tile the region exactly: pairwise disjoint
/// and their union is the full cell set. Checks geometry only and is
/// independent of any solver bookkeeping.
inline bool is_exact_cover(const Solution& sol, const Region& region) {
    std::vector<TriCell> all;
    for (const Placement& p : sol.placements)
        all.insert(all.end(), p.cells.begin(), p.cells.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    return all == region.cells;
}

}  // namespace tangram
