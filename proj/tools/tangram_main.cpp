// Command line front end: solve one shape, verify the whole table,
// list the census, check the strip theorem, render SVG pictures.
//
// Exit codes: 0 success (verify/strips: all checks pass), 1 a recomputed
// result disagrees with the claimed table, 2 usage errors, 3 broken data
// (unreadable files, inconsistent documents).

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tangram/census.hpp"
#include "tangram/io.hpp"
#include "tangram/render.hpp"
#include "tangram/solver.hpp"
#include "tangram/strips.hpp"
#include "tangram/verify.hpp"

namespace {

using namespace tangram;

std::string env_or(const char* name, const std::string& fallback) {
    const char* v = std::getenv(name);
    return v && *v ? std::string(v) : fallback;
}

std::vector<ShapeEntry> load_catalog(const std::string& numbering_path) {
    std::vector<ShapeEntry> entries = enumerate_convex_shapes();
    Numbering table = load_numbering(numbering_path, entries);
    apply_numbering(entries, table);
    return entries;
}

Region resolve_shape(const std::string& arg,
                     const std::vector<ShapeEntry>& catalog) {
    bool numeric = !arg.empty() &&
                   std::all_of(arg.begin(), arg.end(),
                               [](unsigned char c) { return std::isdigit(c); });
    if (numeric) return shape_by_number(std::stoi(arg), catalog).region;
    Region r = make_region(cells_from_key(arg));
    std::string key = region_key(r.cells);
    for (const ShapeEntry& e : catalog)
        if (e.key == key && e.number) {
            r.name = shape_display_name(*e.number);
            return r;
        }
    r.name = "custom";
    return r;
}

std::string out_path(const std::string& explicit_path, const std::string& out_dir,
                     const std::string& name) {
    if (!explicit_path.empty()) return explicit_path;
    return (std::filesystem::path(out_dir) / name).string();
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw data_error("cannot open for writing: " + path);
    out << text;
    if (!out.flush()) throw data_error("write failed: " + path);
    std::cout << "wrote " << path << "\n";
}

int run_solve(const std::string& shape_arg, const std::string& set_name,
              const std::string& mode_name, const std::string& out_file,
              bool count_only, const std::string& numbering,
              const std::string& out_dir) {
    std::vector<ShapeEntry> catalog = load_catalog(numbering);
    Region region = resolve_shape(shape_arg, catalog);
    SetKind set = set_from_string(set_name);
    CountMode mode = count_mode_from_string(mode_name);
    SolutionDocument doc = build_document(region, set, mode);
    std::string label = region.name.empty() ? "custom" : region.name;
    std::cout << label << " (" << doc.shape_key << "): " << doc.entries.size()
              << " " << mode_name << " partitions, " << set_name << " set\n";
    if (!count_only) {
        std::string path = out_path(
            out_file, out_dir, label + "_" + set_name + "_" + mode_name + ".json");
        save_document(path, doc);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

int run_verify_cmd(const std::string& numbering, const std::string& json_out) {
    std::vector<ShapeEntry> catalog = load_catalog(numbering);
    VerifyReport report = run_verify(catalog);
    for (const std::string& line : verify_report_lines(report))
        std::cout << line << "\n";
    if (!json_out.empty())
        write_text(json_out, verify_report_json(report).dump(2) + "\n");
    return report.pass() ? 0 : 1;
}

int run_census_cmd(const std::string& numbering) {
    std::vector<ShapeEntry> catalog = load_catalog(numbering);
    TanSet jp = tan_set(SetKind::japanese);
    TanSet cn = tan_set(SetKind::chinese);
    int jp_count = 0, cn_count = 0;
    for (const ShapeEntry& e : catalog) {
        bool j = classify_coverability(e, jp);
        bool c = classify_coverability(e, cn);
        jp_count += j;
        cn_count += c;
        std::string name = e.number ? shape_display_name(*e.number) : "---";
        std::cout << name << "  " << (j ? 'J' : '-') << (c ? 'C' : '-') << "  "
                  << e.key << "\n";
    }
    std::cout << catalog.size() << " shapes, " << jp_count << " japanese, "
              << cn_count << " chinese\n";
    return 0;
}

int run_strips_cmd() {
    StripReport r = verify_strip_theorem();
    std::cout << "strip partitions: " << r.strip_canonical << " ("
              << r.strip_labeled << " labeled)\n";
    std::cout << "cut structure: "
              << (r.cuts_ok && r.vertical_beside_square
                      ? "ok (six cuts each: five skew, one vertical beside the square)"
                      : "MISMATCH")
              << "\n";
    std::cout << "twins: " << r.twin_pairs << " pairs, " << r.twin_fixed_points
              << " fixed points, " << (r.twins_ok ? "ok" : "MISMATCH") << "\n";
    std::cout << "cut and paste: trapezoid " << r.trapezoid_generated << "/"
              << r.trapezoid_direct << ", parallelogram "
              << r.parallelogram_generated << "/" << r.parallelogram_direct
              << ", twins " << (r.twin_cuts_match ? "consistent" : "MISMATCH")
              << "\n";
    std::cout << "verdict " << (r.pass() ? "PASS" : "FAIL") << "\n";
    return r.pass() ? 0 : 1;
}

int run_render_cmd(const std::string& shape_arg, bool catalog_flag, int index,
                   bool sheet, const std::string& set_name, const Style& style,
                   const std::string& out_file, const std::string& numbering,
                   const std::string& out_dir) {
    std::vector<ShapeEntry> catalog = load_catalog(numbering);
    if (catalog_flag) {
        TanSet jp = tan_set(SetKind::japanese);
        TanSet cn = tan_set(SetKind::chinese);
        std::vector<std::pair<bool, bool>> coverable;
        for (const ShapeEntry& e : catalog)
            coverable.push_back(
                {classify_coverability(e, jp), classify_coverability(e, cn)});
        write_text(out_path(out_file, out_dir, "catalog.svg"),
                   render_catalog(catalog, coverable, style));
        return 0;
    }
    if (shape_arg.empty()) {
        std::cerr << "render: need a shape argument or --catalog\n";
        return 2;
    }
    Region region = resolve_shape(shape_arg, catalog);
    std::string label = region.name.empty() ? "custom" : region.name;
    if (!sheet && index == 0) {
        write_text(out_path(out_file, out_dir, label + ".svg"),
                   render_region(region, style));
        return 0;
    }
    SetKind set = set_from_string(set_name);
    std::vector<CanonicalSolution> canon =
        dedupe(enumerate_partitions(region, tan_set(set)), region);
    if (sheet) {
        std::vector<Solution> reps;
        for (const CanonicalSolution& c : canon) reps.push_back(c.representative);
        write_text(out_path(out_file, out_dir, label + "_sheet.svg"),
                   render_sheet(region, reps, style));
        return 0;
    }
    if (index < 1 || index > static_cast<int>(canon.size()))
        throw std::invalid_argument(
            "render: index out of range, the shape has " +
            std::to_string(canon.size()) + " partitions");
    write_text(
        out_path(out_file, out_dir,
                 label + "_partition_" + std::to_string(index) + ".svg"),
        render_solution(region, canon[static_cast<std::size_t>(index - 1)].representative,
                        style));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact partition enumeration for the seven-piece tangram sets"};
    app.require_subcommand(1);

    std::string numbering = env_or("TANGRAM_NUMBERING", "data/shape_numbers.txt");
    std::string out_dir = env_or("TANGRAM_OUT_DIR", ".");

    auto* solve = app.add_subcommand("solve", "enumerate the partitions of one shape");
    std::string shape_arg;
    solve->add_option("shape", shape_arg, "shape number 1..16 or raster key")
        ->required();
    std::string set_name = "japanese";
    solve->add_option("--set", set_name, "tan set")
        ->check(CLI::IsMember({"japanese", "chinese"}));
    std::string mode_name = "canonical";
    solve->add_option("--mode", mode_name, "counting mode")
        ->check(CLI::IsMember({"labeled", "canonical", "colored"}));
    std::string out_file;
    solve->add_option("--out", out_file, "output JSON path");
    bool count_only = false;
    solve->add_flag("--count-only", count_only, "report the count, skip the document");
    solve->add_option("--numbering", numbering, "numbering table path");

    auto* verify = app.add_subcommand("verify", "recompute the full result table");
    std::string json_out;
    verify->add_option("--json", json_out, "also write the report as JSON");
    verify->add_option("--numbering", numbering, "numbering table path");

    auto* census_cmd = app.add_subcommand("census", "list the convex shape census");
    census_cmd->add_option("--numbering", numbering, "numbering table path");

    app.add_subcommand("strips", "check the strip rearrangement theorem");

    auto* render_cmd = app.add_subcommand("render", "draw shapes and partitions as SVG");
    std::string render_shape;
    render_cmd->add_option("shape", render_shape, "shape number 1..16 or raster key");
    bool catalog_flag = false;
    auto* catalog_opt =
        render_cmd->add_flag("--catalog", catalog_flag, "draw the whole census");
    int index = 0;
    auto* index_opt = render_cmd->add_option(
        "--index", index, "draw one partition, 1-based canonical position");
    auto* sheet_opt = render_cmd->add_flag("--sheet", "draw all partitions as one sheet");
    index_opt->excludes(sheet_opt);
    catalog_opt->excludes(index_opt);
    catalog_opt->excludes(sheet_opt);
    std::string render_set = "japanese";
    render_cmd->add_option("--set", render_set, "tan set")
        ->check(CLI::IsMember({"japanese", "chinese"}));
    Style style;
    render_cmd->add_option("--scale", style.scale, "pixels per unit square")
        ->check(CLI::Range(4, 400));
    render_cmd->add_flag("--grid", style.grid, "draw the unit grid");
    render_cmd->add_flag("--labels", style.labels, "label the pieces");
    bool plain = false;
    render_cmd->add_flag("--plain", plain, "outline only, no palette fills");
    std::string render_out;
    render_cmd->add_option("--out", render_out, "output SVG path");
    render_cmd->add_option("--numbering", numbering, "numbering table path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*solve)
            return run_solve(shape_arg, set_name, mode_name, out_file, count_only,
                             numbering, out_dir);
        if (*verify) return run_verify_cmd(numbering, json_out);
        if (*census_cmd) return run_census_cmd(numbering);
        if (app.get_subcommand("strips")->parsed()) return run_strips_cmd();
        style.colored = !plain;
        return run_render_cmd(render_shape, catalog_flag, index,
                              sheet_opt->count() > 0, render_set, style, render_out,
                              numbering, out_dir);
    } catch (const data_error& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
