#pragma once

// Backtracking exact cover over the cell raster. Branching always
// targets the lowest-index uncovered cell, so each unordered placement
// set is emitted exactly once even for sets with repeated tans: at any
// node exactly one piece of a given solution covers the branch cell.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "tangram/canon.hpp"
#include "tangram/embed.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

struct SolveOptions {
    bool allow_reflection = true;
    // Reject branches where some uncovered cell has no fitting candidate
    // left. Pure pruning: the solution set must not change.
    bool dead_cell_prune = false;
};

namespace detail {

class Searcher {
  public:
    Searcher(const Region& region, const TanSet& set,
             const std::vector<Embedding>& embeddings, SolveOptions opts)
        : embeddings_(embeddings),
          cover_(build_cover_index(embeddings, region)),
          opts_(opts),
          full_(region_mask(region)) {
        remaining_.fill(0);
        for (const Tan& t : set.tans) remaining_[tan_rank(t.name)] = t.multiplicity;
    }

    // Runs the search; stops after the first hit if `first_only`.
    std::vector<Solution> run(bool first_only) {
        out_.clear();
        first_only_ = first_only;
        chosen_.clear();
        dfs(0);
        return std::move(out_);
    }

  private:
    bool usable(const Embedding& e, CellMask occ) const {
        return remaining_[tan_rank(e.tan)] > 0 && (e.mask & occ) == 0;
    }

    bool dead_cell(CellMask occ) const {
        CellMask open = full_ & ~occ;
        while (open != 0) {
            int cell = std::countr_zero(open);
            open &= open - 1;
            bool covered = false;
            for (std::int32_t id : cover_.by_cell[cell])
                if (usable(embeddings_[id], occ)) {
                    covered = true;
                    break;
                }
            if (!covered) return true;
        }
        return false;
    }

    bool dfs(CellMask occ) {
        if (occ == full_) {
            emit();
            return first_only_;
        }
        int cell = std::countr_zero(full_ & ~occ);
        for (std::int32_t id : cover_.by_cell[cell]) {
            const Embedding& e = embeddings_[id];
            if (!usable(e, occ)) continue;
            remaining_[tan_rank(e.tan)] -= 1;
            chosen_.push_back(id);
            CellMask next = occ | e.mask;
            bool stop = (!opts_.dead_cell_prune || !dead_cell(next)) && dfs(next);
            chosen_.pop_back();
            remaining_[tan_rank(e.tan)] += 1;
            if (stop) return true;
        }
        return false;
    }

    void emit() {
        Solution s;
        s.placements.reserve(chosen_.size());
        for (std::int32_t id : chosen_) {
            const Embedding& e = embeddings_[id];
            s.placements.push_back({e.tan, 0, e.cells});
        }
        out_.push_back(normalized(std::move(s)));
    }

    const std::vector<Embedding>& embeddings_;
    CoverIndex cover_;
    SolveOptions opts_;
    CellMask full_;
    std::array<int, kTanKinds> remaining_{};
    std::vector<std::int32_t> chosen_;
    std::vector<Solution> out_;
    bool first_only_ = false;
};

inline void check_area(const Region& region, const TanSet& set) {
    if (static_cast<int>(region.cells.size()) != total_area_cells(set))
        throw std::invalid_argument("region area does not match the tan set");
}

}  // namespace detail

/// Every labeled partition of the region into the set's tans, with an
/// explicit candidate list (intended for order-invariance checks).
inline std::vector<Solution> enumerate_partitions(
    const Region& region, const TanSet& set,
    const std::vector<Embedding>& candidates, SolveOptions opts = {}) {
    detail::check_area(region, set);
    return detail::Searcher(region, set, candidates, opts).run(false);
}

/// Every labeled partition of the region into the set's tans.
inline std::vector<Solution> enumerate_partitions(const Region& region,
                                                  const TanSet& set,
                                                  SolveOptions opts = {}) {
    detail::check_area(region, set);
    std::vector<Embedding> candidates =
        all_embeddings(set, region, opts.allow_reflection);
    return detail::Searcher(region, set, candidates, opts).run(false);
}

/// True iff at least one partition exists; stops at the first.
inline bool exists_partition(const Region& region, const TanSet& set,
                             SolveOptions opts = {}) {
    detail::check_area(region, set);
    std::vector<Embedding> candidates =
        all_embeddings(set, region, opts.allow_reflection);
    return !detail::Searcher(region, set, candidates, opts).run(true).empty();
}

enum class CountMode : std::uint8_t { labeled, canonical, colored };

inline std::string_view to_string(CountMode m) {
    switch (m) {
        case CountMode::labeled: return "labeled";
        case CountMode::canonical: return "canonical";
        default: return "colored";
    }
}

inline CountMode count_mode_from_string(std::string_view s) {
    if (s == "labeled") return CountMode::labeled;
    if (s == "canonical") return CountMode::canonical;
    if (s == "colored") return CountMode::colored;
    throw std::invalid_argument("unknown count mode: " + std::string(s));
}

/// labeled: raw solver emissions. canonical: classes modulo region
/// symmetry and interchange of equal tans. colored: classes with equal
/// tans distinguished.
inline long count_partitions(const Region& region, const TanSet& set, CountMode mode,
                             SolveOptions opts = {}) {
    std::vector<Solution> sols = enumerate_partitions(region, set, opts);
    if (mode == CountMode::labeled) return static_cast<long>(sols.size());
    std::vector<CanonicalSolution> canon = dedupe(sols, region);
    if (mode == CountMode::canonical) return static_cast<long>(canon.size());
    return colored_count(canon, region);
}

}  // namespace tangram
