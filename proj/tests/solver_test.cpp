#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "tangram/census.hpp"
#include "tangram/solver.hpp"

using namespace tangram;

namespace {

std::string plain_serial(const Solution& sol) {
    Solution n = normalized(sol);
    std::string out;
    for (const Placement& p : n.placements) {
        out += to_string(p.tan);
        for (const TriCell& c : p.cells) {
            out += ' ';
            out += std::to_string(c.x) + "." + std::to_string(c.y) + quadrant_name(c.q);
        }
        out += '|';
    }
    return out;
}

std::vector<std::string> serial_set(const std::vector<Solution>& sols) {
    std::vector<std::string> out;
    out.reserve(sols.size());
    for (const Solution& s : sols) out.push_back(plain_serial(s));
    std::sort(out.begin(), out.end());
    return out;
}

// Reference enumerator, structurally unlike the cell-driven search:
// expands multiplicities into an ordered piece list and walks embeddings
// piece by piece, forcing the embedding index to increase between equal
// pieces so each unordered placement set appears exactly once.
std::vector<std::string> ordered_reference(const Region& region, const TanSet& set) {
    std::vector<TanName> pieces;
    std::map<TanName, std::vector<Embedding>> by_name;
    for (const Tan& t : set.tans) {
        by_name[t.name] = tan_embeddings(t, region, true);
        for (int k = 0; k < t.multiplicity; ++k) pieces.push_back(t.name);
    }
    CellMask full = region_mask(region);
    std::vector<std::string> found;
    std::vector<std::pair<TanName, int>> chosen;

    auto rec = [&](auto&& self, std::size_t i, CellMask occ) -> void {
        if (i == pieces.size()) {
            if (occ != full) return;
            Solution s;
            for (auto [name, idx] : chosen)
                s.placements.push_back({name, 0, by_name[name][idx].cells});
            found.push_back(plain_serial(s));
            return;
        }
        const auto& embs = by_name[pieces[i]];
        std::size_t start = 0;
        if (i > 0 && pieces[i - 1] == pieces[i])
            start = static_cast<std::size_t>(chosen.back().second) + 1;
        for (std::size_t e = start; e < embs.size(); ++e) {
            if ((embs[e].mask & occ) != 0) continue;
            chosen.emplace_back(pieces[i], static_cast<int>(e));
            self(self, i + 1, occ | embs[e].mask);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 0);
    std::sort(found.begin(), found.end());
    return found;
}

}  // namespace

TEST_CASE("strip partitions match the ordered reference enumerator") {
    Region strip = j14_region();
    TanSet jp = tan_set(SetKind::japanese);
    auto sols = enumerate_partitions(strip, jp);
    auto reference = ordered_reference(strip, jp);
    REQUIRE(serial_set(sols) == reference);
    CHECK(sols.size() == 96);
    CHECK(dedupe(sols, strip).size() == 24);
}

TEST_CASE("tilted square partitions match the ordered reference enumerator") {
    Region sq = j7_region();
    TanSet jp = tan_set(SetKind::japanese);
    auto sols = enumerate_partitions(sq, jp);
    auto reference = ordered_reference(sq, jp);
    REQUIRE(serial_set(sols) == reference);
    CHECK(dedupe(sols, sq).size() == 3);
}

TEST_CASE("every emitted partition is a proper cover using the whole set") {
    Region strip = j14_region();
    TanSet jp = tan_set(SetKind::japanese);
    for (const Solution& s : enumerate_partitions(strip, jp)) {
        CHECK(is_exact_cover(s, strip));
        REQUIRE(s.placements.size() == 7);
        std::map<TanName, int> used;
        for (const Placement& p : s.placements) used[p.tan] += 1;
        CHECK(used == std::map<TanName, int>{{TanName::Ts, 1},
                                             {TanName::S, 1},
                                             {TanName::P, 1},
                                             {TanName::Tm, 2},
                                             {TanName::Tr, 1},
                                             {TanName::Tz, 1}});
    }
}

TEST_CASE("solution set ignores candidate order") {
    Region strip = j14_region();
    TanSet jp = tan_set(SetKind::japanese);
    auto baseline = serial_set(enumerate_partitions(strip, jp));
    for (unsigned seed : {11u, 23u, 47u}) {
        auto candidates = all_embeddings(jp, strip);
        std::mt19937 rng(seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
        CHECK(serial_set(enumerate_partitions(strip, jp, candidates)) == baseline);
    }
}

TEST_CASE("dead-cell pruning never changes the answer") {
    TanSet jp = tan_set(SetKind::japanese);
    for (const Region& region : {j14_region(), j7_region()}) {
        SolveOptions plain, pruned;
        pruned.dead_cell_prune = true;
        CHECK(serial_set(enumerate_partitions(region, jp, plain)) ==
              serial_set(enumerate_partitions(region, jp, pruned)));
    }
}

TEST_CASE("labeled solution set is closed under region symmetries") {
    Region strip = j14_region();
    auto sols = enumerate_partitions(strip, tan_set(SetKind::japanese));
    auto serials = serial_set(sols);
    std::set<std::string> all(serials.begin(), serials.end());
    for (const Solution& s : sols)
        for (const Transform& g : strip.symmetries)
            CHECK(all.count(plain_serial(transformed(g, s))) == 1);
}

TEST_CASE("enumeration order and instance labels are deterministic") {
    Region strip = j14_region();
    TanSet jp = tan_set(SetKind::japanese);
    auto a = enumerate_partitions(strip, jp);
    auto b = enumerate_partitions(strip, jp);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].placements.size() == b[i].placements.size());
        for (std::size_t j = 0; j < a[i].placements.size(); ++j) {
            CHECK(a[i].placements[j].tan == b[i].placements[j].tan);
            CHECK(a[i].placements[j].instance == b[i].placements[j].instance);
            CHECK(a[i].placements[j].cells == b[i].placements[j].cells);
        }
    }
}

TEST_CASE("canonical key survives relabeling equal tans") {
    Region strip = j14_region();
    auto sols = enumerate_partitions(strip, tan_set(SetKind::japanese));
    REQUIRE_FALSE(sols.empty());
    for (std::size_t i = 0; i < 5 && i < sols.size(); ++i) {
        Solution swapped = sols[i];
        std::vector<std::size_t> tm;
        for (std::size_t j = 0; j < swapped.placements.size(); ++j)
            if (swapped.placements[j].tan == TanName::Tm) tm.push_back(j);
        REQUIRE(tm.size() == 2);
        std::swap(swapped.placements[tm[0]].instance,
                  swapped.placements[tm[1]].instance);
        CHECK(solution_key(swapped, strip) == solution_key(sols[i], strip));
    }
}

TEST_CASE("the chinese set cannot tile the strip") {
    Region strip = j14_region();
    TanSet cn = tan_set(SetKind::chinese);
    CHECK_FALSE(exists_partition(strip, cn));
    CHECK(enumerate_partitions(strip, cn).empty());
}

TEST_CASE("region and set areas must agree") {
    Region sq = region_from_polygon(polygon_units({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK_THROWS_AS(enumerate_partitions(sq, tan_set(SetKind::japanese)),
                    std::invalid_argument);
    CHECK_THROWS_AS(exists_partition(sq, tan_set(SetKind::japanese)),
                    std::invalid_argument);
}

TEST_CASE("count modes on the strip") {
    Region strip = j14_region();
    TanSet jp = tan_set(SetKind::japanese);
    CHECK(count_partitions(strip, jp, CountMode::labeled) == 96);
    CHECK(count_partitions(strip, jp, CountMode::canonical) == 24);
    CHECK(count_partitions(strip, jp, CountMode::colored) == 48);
}
