#pragma once
// JSON partition documents: a complete, self-describing archive of one
// enumeration run. Loading re-validates everything from scratch (shape
// key round trip, piece congruence, exact cover, per-entry class keys),
// so a document that loads cleanly is a proof it was not tampered with.

#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tangram/canon.hpp"
#include "tangram/embed.hpp"
#include "tangram/solver.hpp"
#include "tangram/tans.hpp"
#include "tangram/trigrid.hpp"

namespace tangram {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kDocumentFormat = "tangram-partitions";
inline constexpr int kDocumentVersion = 1;

struct DocumentEntry {
    std::string key;  // class key: canonical, or instance-carrying when colored
    int orbit = 0;    // canonical mode only: distinct labeled images
    Solution solution;
};

struct SolutionDocument {
    std::string shape_name;  // display name, may be empty
    std::string shape_key;   // canonical raster key of the shape
    SetKind set = SetKind::japanese;
    CountMode mode = CountMode::canonical;
    std::vector<DocumentEntry> entries;

    Region region() const {
        return make_region(cells_from_key(shape_key), shape_name);
    }
};

/// Enumerate a region with one tan set and package the result.
inline SolutionDocument build_document(const Region& region, SetKind set_kind,
                                       CountMode mode, SolveOptions opts = {}) {
    SolutionDocument doc;
    doc.shape_name = region.name;
    doc.shape_key = region_key(region.cells);
    doc.set = set_kind;
    doc.mode = mode;
    // Work in the frame the key describes, so stored indices and keys
    // reload against the region the document itself reconstructs.
    Region frame = doc.region();
    TanSet set = tan_set(set_kind);
    std::vector<Solution> sols = enumerate_partitions(frame, set, opts);
    if (mode == CountMode::labeled) {
        for (Solution& s : sols) {
            std::string key = solution_key(s, frame);
            doc.entries.push_back({std::move(key), 0, std::move(s)});
        }
        return doc;
    }
    std::vector<CanonicalSolution> canon = dedupe(sols, frame);
    if (mode == CountMode::canonical) {
        for (CanonicalSolution& c : canon)
            doc.entries.push_back(
                {std::move(c.key), c.orbit_size, std::move(c.representative)});
        return doc;
    }
    for (auto& [key, sol] : colored_classes(canon, frame))
        doc.entries.push_back({key, 0, std::move(sol)});
    return doc;
}

inline ordered_json to_json(const SolutionDocument& doc) {
    Region region = doc.region();
    ordered_json j;
    j["format"] = kDocumentFormat;
    j["version"] = kDocumentVersion;
    j["shape"] = {{"name", doc.shape_name},
                  {"key", doc.shape_key},
                  {"width", region.bounds.width},
                  {"height", region.bounds.height},
                  {"cells", region.cells.size()}};
    j["set"] = std::string(to_string(doc.set));
    j["mode"] = std::string(to_string(doc.mode));
    j["count"] = doc.entries.size();
    ordered_json partitions = ordered_json::array();
    for (const DocumentEntry& e : doc.entries) {
        ordered_json je;
        je["key"] = e.key;
        if (doc.mode == CountMode::canonical) je["orbit"] = e.orbit;
        ordered_json pieces = ordered_json::array();
        for (const Placement& p : e.solution.placements) {
            ordered_json jp;
            jp["tan"] = std::string(to_string(p.tan));
            jp["instance"] = p.instance;
            ordered_json cells = ordered_json::array();
            for (const TriCell& c : p.cells)
                cells.push_back(cell_index(c, region.bounds));
            jp["cells"] = std::move(cells);
            pieces.push_back(std::move(jp));
        }
        je["pieces"] = std::move(pieces);
        partitions.push_back(std::move(je));
    }
    j["partitions"] = std::move(partitions);
    return j;
}

namespace detail {

inline const ordered_json& need_field(const ordered_json& o, const char* field) {
    auto it = o.find(field);
    if (it == o.end())
        throw data_error(std::string("document: missing field ") + field);
    return *it;
}

}  // namespace detail

/// Parse and cross-check a document. Every claim in the file is
/// recomputed: the shape key must round-trip, every piece must be
/// congruent to its tan, every entry must tile the shape exactly with
/// the declared set, and every class key must match a fresh derivation.
inline SolutionDocument document_from_json(const ordered_json& j) {
    using detail::need_field;
    try {
        if (need_field(j, "format").get<std::string>() != kDocumentFormat)
            throw data_error("document: unknown format tag");
        if (need_field(j, "version").get<int>() != kDocumentVersion)
            throw data_error("document: unsupported version");

        SolutionDocument doc;
        const ordered_json& shape = need_field(j, "shape");
        doc.shape_name = need_field(shape, "name").get<std::string>();
        doc.shape_key = need_field(shape, "key").get<std::string>();
        Region region;
        try {
            region = doc.region();
        } catch (const std::invalid_argument& e) {
            throw data_error(std::string("document: ") + e.what());
        }
        if (region_key(region.cells) != doc.shape_key)
            throw data_error("document: shape key is not canonical");
        if (need_field(shape, "width").get<int>() != region.bounds.width ||
            need_field(shape, "height").get<int>() != region.bounds.height ||
            need_field(shape, "cells").get<std::size_t>() != region.cells.size())
            throw data_error("document: shape dimensions do not match the key");

        try {
            doc.set = set_from_string(need_field(j, "set").get<std::string>());
            doc.mode =
                count_mode_from_string(need_field(j, "mode").get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw data_error(std::string("document: ") + e.what());
        }
        const TanSet set = tan_set(doc.set);

        const ordered_json& partitions = need_field(j, "partitions");
        if (!partitions.is_array())
            throw data_error("document: partitions must be an array");
        if (need_field(j, "count").get<std::size_t>() != partitions.size())
            throw data_error("document: count does not match the partition list");

        std::set<std::string> seen_keys;
        std::string prev_key;
        for (const ordered_json& je : partitions) {
            DocumentEntry e;
            e.key = need_field(je, "key").get<std::string>();
            Solution sol;
            std::map<TanName, std::set<int>> instances;
            for (const ordered_json& jp : need_field(je, "pieces")) {
                Placement p;
                try {
                    p.tan = tan_from_string(need_field(jp, "tan").get<std::string>());
                } catch (const std::invalid_argument& err) {
                    throw data_error(std::string("document: ") + err.what());
                }
                p.instance = need_field(jp, "instance").get<int>();
                try {
                    for (const ordered_json& jc : need_field(jp, "cells"))
                        p.cells.push_back(
                            cell_at_index(jc.get<int>(), region.bounds));
                } catch (const std::invalid_argument& err) {
                    throw data_error(std::string("document: ") + err.what());
                }
                std::sort(p.cells.begin(), p.cells.end());
                if (!find_congruence(p.cells, tan_piece(p.tan).cells))
                    throw data_error("document: a piece is not congruent to its tan");
                if (!instances[p.tan].insert(p.instance).second)
                    throw data_error("document: duplicate piece instance");
                sol.placements.push_back(std::move(p));
            }
            for (const Tan& t : set.tans) {
                const std::set<int>& used = instances[t.name];
                bool exact = static_cast<int>(used.size()) == t.multiplicity &&
                             (used.empty() || (*used.begin() == 0 &&
                                               *used.rbegin() == t.multiplicity - 1));
                if (!exact)
                    throw data_error("document: piece multiset does not match the set");
            }
            if (instances.size() != set.tans.size())
                throw data_error("document: piece multiset does not match the set");
            sol = normalized(std::move(sol), false);
            if (!is_exact_cover(sol, region))
                throw data_error("document: partition does not tile the shape");

            if (doc.mode == CountMode::colored) {
                if (colored_key(sol, region) != e.key)
                    throw data_error("document: entry key mismatch");
            } else {
                CanonicalSolution c = canonicalize(sol, region);
                if (c.key != e.key)
                    throw data_error("document: entry key mismatch");
                if (doc.mode == CountMode::canonical) {
                    e.orbit = need_field(je, "orbit").get<int>();
                    if (e.orbit != c.orbit_size)
                        throw data_error("document: entry orbit mismatch");
                }
            }
            if (doc.mode != CountMode::labeled && !seen_keys.insert(e.key).second)
                throw data_error("document: duplicate entry key");
            if (doc.mode == CountMode::canonical && !prev_key.empty() &&
                !(prev_key < e.key))
                throw data_error("document: canonical entries out of order");
            prev_key = e.key;
            e.solution = std::move(sol);
            doc.entries.push_back(std::move(e));
        }
        return doc;
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("document: malformed JSON value: ") + e.what());
    }
}

/// Serialize with a stable layout: two-space indent, trailing newline.
inline std::string document_text(const SolutionDocument& doc) {
    return to_json(doc).dump(2) + "\n";
}

inline void save_document(const std::string& path, const SolutionDocument& doc) {
    std::string text = document_text(doc);  // serialize before touching the file
    std::ofstream out(path);
    if (!out) throw data_error("cannot open for writing: " + path);
    out << text;
    if (!out.flush()) throw data_error("write failed: " + path);
}

inline SolutionDocument load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw data_error("cannot open document: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw data_error(std::string("document: parse error: ") + e.what());
    }
    return document_from_json(j);
}

}  // namespace tangram
