#pragma once

// Canonical forms. A region gets a raster key minimized over the point
// group; a partition gets a serialization minimized over the region's
// symmetries, with copies of equal tans interchangeable. Keys are byte
// stable and safe to persist.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tangram/embed.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

inline int tan_rank(TanName n) { return static_cast<int>(n); }

namespace detail {

inline Bounds bounds_of(const std::vector<TriCell>& anchored_cells) {
    Bounds b;
    for (const TriCell& c : anchored_cells) {
        b.width = std::max(b.width, c.x + 1);
        b.height = std::max(b.height, c.y + 1);
    }
    return b;
}

// "<W>x<H>:" then one lowercase hex nibble per square, row-major from
// y = 0; bits N=1, E=2, S=4, W=8. Input must be anchored and sorted.
inline std::string raster_serial(const std::vector<TriCell>& cells) {
    Bounds b = bounds_of(cells);
    std::vector<int> nibbles(static_cast<std::size_t>(b.width) * b.height, 0);
    for (const TriCell& c : cells)
        nibbles[static_cast<std::size_t>(c.y) * b.width + c.x] |=
            1 << static_cast<int>(c.q);
    std::string s = std::to_string(b.width) + "x" + std::to_string(b.height) + ":";
    s.reserve(s.size() + nibbles.size());
    for (int n : nibbles) s += "0123456789abcdef"[n];
    return s;
}

inline void append_two_digits(std::string& s, int v) {
    s += static_cast<char>('0' + v / 10);
    s += static_cast<char>('0' + v % 10);
}

}  // namespace detail

/// Canonical raster key of a cell set: the byte-least serialization over
/// all 8 point-group images. Congruent sets share a key; the raster is
/// fully recoverable from it.
inline std::string region_key(const std::vector<TriCell>& cells) {
    if (cells.empty()) throw std::invalid_argument("region_key: empty cell set");
    std::string best;
    for (const Transform& g : point_group()) {
        std::string s = detail::raster_serial(anchored(transformed(g, cells)));
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

/// Inverse of the raster serialization; accepts any serialization, not
/// just canonical ones.
inline std::vector<TriCell> cells_from_key(const std::string& key) {
    std::size_t xpos = key.find('x');
    std::size_t colon = key.find(':');
    if (xpos == std::string::npos || colon == std::string::npos || xpos >= colon)
        throw std::invalid_argument("malformed raster key: " + key);
    int w = 0, h = 0;
    try {
        w = std::stoi(key.substr(0, xpos));
        h = std::stoi(key.substr(xpos + 1, colon - xpos - 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed raster key: " + key);
    }
    std::string body = key.substr(colon + 1);
    if (w <= 0 || h <= 0 || body.size() != static_cast<std::size_t>(w) * h)
        throw std::invalid_argument("raster key size mismatch: " + key);
    std::vector<TriCell> cells;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            char ch = body[static_cast<std::size_t>(y) * w + x];
            int nib = ch >= '0' && ch <= '9'   ? ch - '0'
                      : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10
                                               : -1;
            if (nib < 0) throw std::invalid_argument("raster key has a bad digit");
            for (int qi = 0; qi < 4; ++qi)
                if (nib & (1 << qi)) cells.push_back({x, y, static_cast<Quadrant>(qi)});
        }
    }
    std::sort(cells.begin(), cells.end());
    return cells;
}

/// Placements ordered by (tan rank, cells); copies of a kind renumbered
/// 0..k-1 in that order when `renumber` is set.
inline Solution normalized(Solution s, bool renumber = true) {
    for (Placement& p : s.placements) std::sort(p.cells.begin(), p.cells.end());
    std::sort(s.placements.begin(), s.placements.end(),
              [](const Placement& a, const Placement& b) {
                  if (a.tan != b.tan) return tan_rank(a.tan) < tan_rank(b.tan);
                  if (a.cells != b.cells) return a.cells < b.cells;
                  return a.instance < b.instance;
              });
    if (renumber) {
        int run = 0;
        for (std::size_t i = 0; i < s.placements.size(); ++i) {
            if (i > 0 && s.placements[i].tan == s.placements[i - 1].tan)
                ++run;
            else
                run = 0;
            s.placements[i].instance = run;
        }
    }
    return s;
}

/// Image of a whole partition; instance labels travel with their pieces.
inline Solution transformed(const Transform& g, const Solution& s) {
    Solution out;
    out.placements.reserve(s.placements.size());
    for (const Placement& p : s.placements)
        out.placements.push_back({p.tan, p.instance, transformed(g, p.cells)});
    return normalized(std::move(out), false);
}

namespace detail {

// "Ts:04,05;S:00,01,02,03;..." with placements pre-sorted by (rank, cells).
// with_instances switches to "Ts#0:..." tokens ordered by (rank, instance),
// which pins down a full labeling of equal tans. Cell indices are the
// two-digit bounding-box positions, so boxes are capped at 100 of them.
inline std::string solution_serial(const Solution& s, const Bounds& b,
                                   bool with_instances) {
    if (4 * b.width * b.height > 100)
        throw data_error("region bounding box too large for stable keys");
    std::vector<const Placement*> order;
    order.reserve(s.placements.size());
    for (const Placement& p : s.placements) order.push_back(&p);
    if (with_instances) {
        std::sort(order.begin(), order.end(), [](const Placement* a, const Placement* b2) {
            if (a->tan != b2->tan) return tan_rank(a->tan) < tan_rank(b2->tan);
            return a->instance < b2->instance;
        });
    }
    std::string out;
    for (const Placement* p : order) {
        if (!out.empty()) out += ';';
        out += to_string(p->tan);
        if (with_instances) {
            out += '#';
            out += static_cast<char>('0' + p->instance);
        }
        out += ':';
        bool first = true;
        for (const TriCell& c : p->cells) {
            if (!first) out += ',';
            first = false;
            append_two_digits(out, cell_index(c, b));
        }
    }
    return out;
}

}  // namespace detail

/// One partition up to region symmetry and interchange of equal tans.
struct CanonicalSolution {
    std::string key;
    Solution representative;  // the image realizing the key, renumbered
    int orbit_size = 0;       // distinct labeled images under the symmetries
};

/// Key of a partition: byte-least serialization over the region's
/// symmetry group, instance labels erased.
inline CanonicalSolution canonicalize(const Solution& sol, const Region& region) {
    if (!is_exact_cover(sol, region))
        throw std::invalid_argument("canonicalize: placements do not tile the region");
    CanonicalSolution out;
    std::vector<std::string> images;
    Solution best_sol;
    for (const Transform& g : region.symmetries) {
        Solution img = transformed(g, sol);
        std::string s = detail::solution_serial(img, region.bounds, false);
        if (out.key.empty() || s < out.key) {
            out.key = s;
            best_sol = std::move(img);
        }
        images.push_back(std::move(s));
    }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    out.orbit_size = static_cast<int>(images.size());
    out.representative = normalized(std::move(best_sol));
    return out;
}

inline std::string solution_key(const Solution& sol, const Region& region) {
    return canonicalize(sol, region).key;
}

/// Collapse labeled partitions into canonical ones, sorted by key.
/// The input must be symmetry-closed (any full enumeration is); each
/// class must appear exactly orbit_size times, which is re-checked here.
inline std::vector<CanonicalSolution> dedupe(const std::vector<Solution>& sols,
                                             const Region& region) {
    std::map<std::string, std::pair<CanonicalSolution, int>> classes;
    for (const Solution& s : sols) {
        CanonicalSolution c = canonicalize(s, region);
        auto it = classes.find(c.key);
        if (it == classes.end()) {
            std::string key = c.key;
            classes.emplace(std::move(key), std::make_pair(std::move(c), 1));
        } else {
            it->second.second += 1;
        }
    }
    std::vector<CanonicalSolution> out;
    out.reserve(classes.size());
    for (auto& [key, entry] : classes) {
        if (entry.first.orbit_size != entry.second)
            throw data_error("dedupe: labeled multiplicity " +
                             std::to_string(entry.second) + " != orbit size " +
                             std::to_string(entry.first.orbit_size) + " for " + key);
        out.push_back(std::move(entry.first));
    }
    return out;
}

/// Partitions with copies of equal tans distinguished (say, two colours
/// Key of the colored class holding this labeled partition: the least
/// instance-carrying serialization over the symmetry group. Two labeled
/// partitions share it exactly when a region symmetry maps one onto the
/// other with matching labels.
inline std::string colored_key(const Solution& sol, const Region& region) {
    if (!is_exact_cover(sol, region))
        throw std::invalid_argument("colored_key: placements do not tile the region");
    std::string best;
    for (const Transform& g : region.symmetries) {
        std::string s =
            detail::solution_serial(transformed(g, sol), region.bounds, true);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

/// of Tm). Classes are keyed by the least instance-carrying serialization
/// over the symmetry group; output order is canonical key, then class key.
inline std::vector<std::pair<std::string, Solution>> colored_classes(
    const std::vector<CanonicalSolution>& canonicals, const Region& region) {
    std::vector<std::pair<std::string, Solution>> out;
    for (const CanonicalSolution& canon : canonicals) {
        // Group indices of equal tans; enumerate all relabelings.
        const Solution& base = canon.representative;
        std::vector<std::vector<int>> groups;
        for (std::size_t i = 0; i < base.placements.size();) {
            std::size_t j = i;
            while (j < base.placements.size() &&
                   base.placements[j].tan == base.placements[i].tan)
                ++j;
            std::vector<int> g;
            for (std::size_t k = i; k < j; ++k) g.push_back(static_cast<int>(k));
            groups.push_back(std::move(g));
            i = j;
        }
        std::map<std::string, Solution> classes;
        std::vector<std::vector<int>> perms(groups.size());
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            perms[gi].resize(groups[gi].size());
            for (std::size_t k = 0; k < groups[gi].size(); ++k)
                perms[gi][k] = static_cast<int>(k);
        }
        // Odometer over per-group label permutations.
        while (true) {
            Solution labeled = base;
            for (std::size_t gi = 0; gi < groups.size(); ++gi)
                for (std::size_t k = 0; k < groups[gi].size(); ++k)
                    labeled.placements[groups[gi][k]].instance = perms[gi][k];
            std::string best;
            Solution best_sol;
            for (const Transform& g : region.symmetries) {
                Solution img = transformed(g, labeled);
                std::string s = detail::solution_serial(img, region.bounds, true);
                if (best.empty() || s < best) {
                    best = std::move(s);
                    best_sol = std::move(img);
                }
            }
            classes.try_emplace(std::move(best), std::move(best_sol));

            std::size_t gi = 0;
            while (gi < groups.size() &&
                   !std::next_permutation(perms[gi].begin(), perms[gi].end()))
                ++gi;
            if (gi == groups.size()) break;
        }
        for (auto& [key, sol] : classes) out.emplace_back(key, std::move(sol));
    }
    return out;
}

inline long colored_count(const std::vector<CanonicalSolution>& canonicals,
                          const Region& region) {
    return static_cast<long>(colored_classes(canonicals, region).size());
}

}  // namespace tangram
