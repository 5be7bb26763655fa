#include <cctype>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "depdist/arrangement.hpp"
#include "depdist/audit.hpp"
#include "depdist/bounds.hpp"
#include "depdist/convexity.hpp"
#include "depdist/cost_function.hpp"
#include "depdist/errors.hpp"
#include "depdist/export.hpp"
#include "depdist/format.hpp"
#include "depdist/free_tree.hpp"
#include "depdist/json_util.hpp"
#include "depdist/landscape.hpp"

namespace {

using namespace depdist;

constexpr int kExitAssertionFailed = 2;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == sep) {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

std::string slug(const std::string& text) {
    std::string out;
    for (char c : text)
        out += std::isalnum(static_cast<unsigned char>(c))
                   ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                   : '-';
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed writing " + path);
}

struct TreeSpec {
    std::string family;
    int n = 0;
    std::string spine;
    std::string tree_file;

    void add_options(CLI::App* cmd, bool generators_only) {
        cmd->add_option("--family", family,
                        generators_only ? "tree family: star or quasistar"
                                        : "tree family: star, quasistar, path, balanced_bistar");
        cmd->add_option("--n", n, "number of vertices");
        if (!generators_only) {
            cmd->add_option("--spine", spine, "caterpillar spine degrees, e.g. 2,3,2");
            cmd->add_option("--tree-file", tree_file, "edge-list file, one \"u v\" line per edge");
        }
    }

    FreeTree resolve() const {
        const int sources = !family.empty() + !spine.empty() + !tree_file.empty();
        if (sources != 1)
            throw std::invalid_argument(
                "give exactly one tree spec: --family with --n, --spine, or --tree-file");
        if (!family.empty()) {
            const auto tag = family_tag_from_name(family);
            if (!tag) throw std::invalid_argument("unknown family \"" + family + "\"");
            if (n <= 0) throw std::invalid_argument("--family needs --n");
            return make_family(*tag, n);
        }
        if (!spine.empty()) {
            std::vector<int> degrees;
            for (const std::string& part : split(spine, ','))
                degrees.push_back(static_cast<int>(parse_number(part)));
            return make_caterpillar(degrees);
        }
        std::ifstream in(tree_file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read tree file " + tree_file);
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_edge_list(buffer.str());
    }

    std::string slug_name() const {
        if (!family.empty()) return slug(family);
        if (!spine.empty()) return "spine-" + slug(spine);
        return "tree";
    }
};

struct ExpectSpec {
    std::string property;
    std::string verdict;
};

std::vector<ExpectSpec> parse_expectations(const std::vector<std::string>& raw) {
    std::vector<ExpectSpec> out;
    for (const std::string& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("--expect wants property=verdict, got \"" + item + "\"");
        out.push_back({item.substr(0, eq), item.substr(eq + 1)});
    }
    return out;
}

/// Applies --expect assertions; returns the exit code.
int check_expectations(const ConvexityReport& report, const std::vector<ExpectSpec>& expected) {
    int failures = 0;
    for (const auto& expect : expected) {
        const ReportEntry* entry = report.find(expect.property);
        if (!entry) {
            std::cout << "expectation FAILED: no property named \"" << expect.property << "\"\n";
            ++failures;
            continue;
        }
        if (entry->verdict != expect.verdict) {
            std::cout << "expectation FAILED: " << expect.property << " = " << entry->verdict
                      << ", expected " << expect.verdict << "\n";
            ++failures;
        }
    }
    if (!expected.empty() && failures == 0)
        std::cout << "all " << expected.size() << " expectations hold\n";
    return failures == 0 ? 0 : kExitAssertionFailed;
}

void print_report_summary(const ConvexityReport& report) {
    for (const auto& entry : report.entries) {
        std::cout << "  " << entry.property << ": " << entry.verdict;
        if (entry.fails() && !entry.witness.empty()) {
            std::cout << " at (";
            const auto& point = entry.witness.front().point;
            for (std::size_t i = 0; i < point.size(); ++i)
                std::cout << (i ? "," : "") << point[i];
            std::cout << ")";
        }
        if (!entry.note.empty()) std::cout << " [" << entry.note << "]";
        std::cout << "\n";
    }
}

// --- landscape ---

struct LandscapeArgs {
    TreeSpec tree;
    std::string cost = "identity";
    std::string format = "csv";
    std::string output;
    std::string slice_spec;
    bool planar = false;
};

int run_landscape(const LandscapeArgs& args) {
    const auto tag = family_tag_from_name(args.tree.family);
    if (args.tree.family.empty() || !tag ||
        (*tag != FamilyTag::star && *tag != FamilyTag::quasistar))
        throw std::invalid_argument("landscape needs --family star or --family quasistar");
    const int n = args.tree.n;
    if (n <= 0) throw std::invalid_argument("--family needs --n");
    const CostFunction g = CostFunction::from_spec(args.cost, std::max(1, n - 1));

    std::string path = args.output;
    if (path.empty()) {
        path = "landscape_" + slug(args.tree.family) + "_n" + format_number(n) + "_" +
               slug(args.cost);
        if (args.planar) path += "_planar";
        if (!args.slice_spec.empty()) path += "_slice_" + slug(args.slice_spec);
        path += "." + args.format;
    }

    if (*tag == FamilyTag::star) {
        if (args.planar) throw std::invalid_argument("--planar applies to quasistar landscapes");
        if (!args.slice_spec.empty())
            throw std::invalid_argument("--slice applies to quasistar landscapes");
        const StarLandscape ls = star_landscape(n, g);
        std::string content;
        if (args.format == "csv") content = star_landscape_csv(ls);
        else if (args.format == "json") content = star_landscape_json(ls);
        else content = star_landscape_svg(ls);
        write_file(path, content);
        std::cout << "star landscape n=" << n << " cost=" << args.cost << ": min "
                  << format_number(ls.min_value) << " at l in {";
        for (std::size_t i = 0; i < ls.optimal_positions.size(); ++i)
            std::cout << (i ? "," : "") << ls.optimal_positions[i];
        std::cout << "}\nwrote " << path << " (" << n << " data rows)\n";
        return 0;
    }

    const QuasistarGrid grid = quasistar_grid(n, g, args.planar);
    std::string content;
    long long rows = grid.filled();
    if (!args.slice_spec.empty()) {
        if (args.format != "csv")
            throw std::invalid_argument("--slice output is the CSV matrix; use --format csv");
        const auto parts = split(args.slice_spec, '=');
        if (parts.size() != 2 || parts[0].size() != 1)
            throw std::invalid_argument("--slice wants axis=value, e.g. q=3");
        const GridSlice panel = slice(grid, parts[0][0], static_cast<int>(parse_number(parts[1])));
        content = slice_csv(panel);
        rows = panel.filled;
    } else if (args.format == "csv") {
        content = grid_csv(grid);
    } else if (args.format == "json") {
        content = grid_json(grid);
    } else {
        content = grid_heatmap_svg(grid);
    }
    write_file(path, content);

    const auto& first_min = grid.argmin.front();
    const auto& first_max = grid.argmax.front();
    std::cout << (args.planar ? "planar " : "") << "quasistar landscape n=" << n
              << " cost=" << args.cost << ": " << grid.filled() << " cells, min "
              << format_number(grid.min_value) << " at (l,p,q)=(" << first_min[0] << ","
              << first_min[1] << "," << first_min[2] << ") [" << grid.argmin.size()
              << " cells], max " << format_number(grid.max_value) << " at (l,p,q)=("
              << first_max[0] << "," << first_max[1] << "," << first_max[2] << ") ["
              << grid.argmax.size() << " cells]\n";
    std::cout << "wrote " << path << " (" << rows << " data rows)\n";
    return 0;
}

// --- audit ---

struct AuditArgs {
    TreeSpec tree;
    std::string cost = "identity";
    std::string format = "json";
    std::string output;
    bool planar = false;
    std::vector<std::string> expect;
};

int run_audit(const AuditArgs& args) {
    const auto tag = family_tag_from_name(args.tree.family);
    if (args.tree.family.empty() || !tag ||
        (*tag != FamilyTag::star && *tag != FamilyTag::quasistar))
        throw std::invalid_argument("audit needs --family star or --family quasistar");
    if (args.format != "json")
        throw std::invalid_argument("audit reports are JSON; use --format json");
    const int n = args.tree.n;
    if (n <= 0) throw std::invalid_argument("--family needs --n");
    const CostFunction g = CostFunction::from_spec(args.cost, std::max(1, n - 1));

    ConvexityReport report;
    std::string described;
    if (*tag == FamilyTag::star) {
        if (args.planar) throw std::invalid_argument("--planar applies to quasistar audits");
        report = audit_star(n, g);
        described = "star";
    } else if (args.planar) {
        report = audit_planar_quasistar(n, g);
        described = "planar quasistar";
    } else {
        report = audit_quasistar(n, g);
        described = "quasistar";
    }

    std::string path = args.output;
    if (path.empty()) {
        path = "audit_" + slug(args.tree.family) + "_n" + format_number(n) + "_" +
               slug(args.cost);
        if (args.planar) path += "_planar";
        path += ".json";
    }
    write_file(path, report.to_json_string());

    std::cout << described << " audit n=" << n << " cost=" << args.cost << ":\n";
    print_report_summary(report);
    std::cout << "wrote " << path << "\n";
    return check_expectations(report, parse_expectations(args.expect));
}

// --- bounds ---

struct BoundsArgs {
    int n_min = 0;
    int n_max = 0;
    std::string families = "star,quasistar,path,balanced_bistar";
    std::string format = "csv";
    std::string output;
    std::string plot_data;
    std::string plot_svg;
    int oracle_cap = 0;
    bool verify_oracle = false;
};

int run_bounds(const BoundsArgs& args) {
    std::vector<FamilyTag> families;
    for (const std::string& name : split(args.families, ',')) {
        const auto tag = family_tag_from_name(name);
        if (!tag) throw std::invalid_argument("unknown family \"" + name + "\"");
        families.push_back(*tag);
    }
    const int cap = args.oracle_cap > 0 ? args.oracle_cap : default_oracle_cap();
    const std::vector<BoundsRow> rows = bounds_table(args.n_min, args.n_max, families, cap);

    std::string path = args.output;
    if (path.empty())
        path = "bounds_n" + format_number(args.n_min) + "-" + format_number(args.n_max) + "." +
               args.format;
    if (args.format == "json") write_file(path, bounds_json(rows));
    else if (args.format == "csv") write_file(path, bounds_csv(rows));
    else throw std::invalid_argument("bounds tables are csv or json; use --plot-svg for charts");

    const auto figure = bounds_figure_data(rows);
    if (!args.plot_data.empty()) write_file(args.plot_data, plot_data_csv(figure));
    if (!args.plot_svg.empty()) write_file(args.plot_svg, line_chart_svg(figure));

    std::cout << "bounds table n=" << args.n_min << ".." << args.n_max << ", "
              << families.size() << " families, " << rows.size() << " rows\n";
    std::cout << "wrote " << path << "\n";
    if (!args.plot_data.empty()) std::cout << "wrote " << args.plot_data << "\n";
    if (!args.plot_svg.empty()) std::cout << "wrote " << args.plot_svg << "\n";

    if (!args.verify_oracle) return 0;
    int mismatches = 0;
    for (const auto& row : rows) {
        const Rational rnd = row.random_baseline;
        if (row.d_min && Rational(*row.d_min) > rnd) {
            std::cout << "ordering FAILED: " << family_tag_name(row.family) << " n=" << row.n
                      << " d_min " << *row.d_min << " > d_random " << rnd.str() << "\n";
            ++mismatches;
        }
        if (row.d_max && Rational(*row.d_max) < rnd) {
            std::cout << "ordering FAILED: " << family_tag_name(row.family) << " n=" << row.n
                      << " d_max " << *row.d_max << " < d_random " << rnd.str() << "\n";
            ++mismatches;
        }
        if (row.n > cap) continue;
        const OracleResult oracle =
            brute_force(make_family(row.family, row.n), CostFunction::identity(row.n - 1), cap);
        if (row.d_min && static_cast<double>(*row.d_min) != oracle.min) {
            std::cout << "oracle MISMATCH: " << family_tag_name(row.family) << " n=" << row.n
                      << " d_min " << *row.d_min << " vs oracle " << format_number(oracle.min)
                      << "\n";
            ++mismatches;
        }
        if (row.d_max && static_cast<double>(*row.d_max) != oracle.max) {
            std::cout << "oracle MISMATCH: " << family_tag_name(row.family) << " n=" << row.n
                      << " d_max " << *row.d_max << " vs oracle " << format_number(oracle.max)
                      << "\n";
            ++mismatches;
        }
    }
    if (mismatches == 0) {
        std::cout << "verified against the exhaustive oracle up to n=" << cap << "\n";
        return 0;
    }
    return kExitAssertionFailed;
}

// --- oracle ---

struct OracleArgs {
    TreeSpec tree;
    std::string cost = "identity";
    std::string output;
    int oracle_cap = 0;
    bool planar = false;
    long long sample = 0;
    std::uint64_t seed = 0;
};

int run_oracle(const OracleArgs& args) {
    const FreeTree tree = args.tree.resolve();
    const int n = tree.n();
    const CostFunction g = CostFunction::from_spec(args.cost, std::max(1, n - 1));
    const int cap = args.oracle_cap > 0 ? args.oracle_cap : default_oracle_cap();

    std::string path = args.output;
    if (path.empty()) {
        path = "oracle_" + args.tree.slug_name() + "_n" + format_number(n) + "_" +
               slug(args.cost);
        if (args.planar) path += "_planar";
        if (args.sample > 0)
            path += "_sample" + format_number(args.sample) + "_seed" + std::to_string(args.seed);
        path += ".json";
    }

    if (args.sample > 0) {
        std::mt19937_64 rng(args.seed);
        double total = 0.0;
        long long used = 0;
        for (long long i = 0; i < args.sample; ++i) {
            const LinearArrangement arr = random_arrangement(n, rng);
            if (args.planar && !is_planar(tree, arr)) continue;
            total += total_cost(tree, arr, g);
            ++used;
        }
        if (used == 0) throw std::runtime_error("no sample satisfied the planar filter");
        const double average = total / static_cast<double>(used);
        nlohmann::json j;
        j["n"] = n;
        j["cost"] = g.spec();
        j["samples"] = args.sample;
        j["used"] = used;
        j["seed"] = args.seed;
        j["average"] = json_number(average);
        write_file(path, j.dump(2) + "\n");
        std::cout << "sampled average cost over " << used << " arrangements: "
                  << format_number(average) << "\nwrote " << path << "\n";
        return 0;
    }

    const OracleResult result = brute_force(tree, g, cap, args.planar);
    write_file(path, result.to_json_string() + "\n");
    std::cout << (args.planar ? "planar " : "") << "oracle n=" << n << " cost=" << args.cost
              << ": min " << format_number(result.min) << " (" << result.argmin_count
              << " arrangements), max " << format_number(result.max) << " ("
              << result.argmax_count << " arrangements), " << result.arrangements
              << " searched\nwrote " << path << "\n";
    return 0;
}

// --- hubiness ---

struct HubinessArgs {
    TreeSpec tree;
    std::string output;
};

int run_hubiness(const HubinessArgs& args) {
    const FreeTree tree = args.tree.resolve();
    const TreeFamily family = classify(tree);
    const Rational h = hubiness(tree);

    nlohmann::json j;
    j["n"] = tree.n();
    j["degrees"] = tree.degrees();
    j["hubiness"] = h.str();
    j["hubiness_value"] = json_number(h.to_double());
    nlohmann::json tags = nlohmann::json::array();
    for (FamilyTag tag : family.tags) tags.push_back(family_tag_name(tag));
    j["tags"] = std::move(tags);
    j["hub"] = family.hub ? nlohmann::json(*family.hub) : nlohmann::json();

    std::string path = args.output;
    if (path.empty())
        path = "hubiness_" + args.tree.slug_name() + "_n" + format_number(tree.n()) + ".json";
    write_file(path, j.dump(2) + "\n");

    std::cout << "hubiness <k^2> = " << h.str();
    if (!h.is_integer()) std::cout << " = " << format_number(h.to_double());
    std::cout << "; tags:";
    if (family.tags.empty()) std::cout << " (none)";
    for (FamilyTag tag : family.tags) std::cout << " " << family_tag_name(tag);
    if (family.hub) std::cout << "; hub vertex " << *family.hub;
    std::cout << "\nwrote " << path << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dependency-distance landscapes, convexity audits and arrangement bounds"};
    app.require_subcommand(1);

    LandscapeArgs landscape_args;
    CLI::App* landscape_cmd =
        app.add_subcommand("landscape", "star or quasistar cost landscape");
    landscape_args.tree.add_options(landscape_cmd, true);
    landscape_cmd->add_option("--cost", landscape_args.cost,
                              "cost spec: identity, power:K, exp:B, table:v1,v2,...");
    landscape_cmd->add_option("--format", landscape_args.format, "csv, json or svg")
        ->check(CLI::IsMember({"csv", "json", "svg"}));
    landscape_cmd->add_option("--output", landscape_args.output, "output file path");
    landscape_cmd->add_option("--slice", landscape_args.slice_spec,
                              "fix one grid axis, e.g. q=3 (CSV matrix output)");
    landscape_cmd->add_flag("--planar", landscape_args.planar,
                            "restrict the quasistar grid to crossing-free cells");

    AuditArgs audit_args;
    CLI::App* audit_cmd = app.add_subcommand("audit", "convexity-property audit with witnesses");
    audit_args.tree.add_options(audit_cmd, true);
    audit_cmd->add_option("--cost", audit_args.cost, "cost spec");
    audit_cmd->add_option("--format", audit_args.format, "json");
    audit_cmd->add_option("--output", audit_args.output, "report file path");
    audit_cmd->add_flag("--planar", audit_args.planar, "audit the crossing-free reduction");
    audit_cmd->add_option("--expect", audit_args.expect,
                          "assert property=verdict; nonzero exit on mismatch");

    BoundsArgs bounds_args;
    CLI::App* bounds_cmd = app.add_subcommand("bounds", "closed-form bounds table and figures");
    bounds_cmd->add_option("--n-min", bounds_args.n_min, "smallest n")->required();
    bounds_cmd->add_option("--n-max", bounds_args.n_max, "largest n")->required();
    bounds_cmd->add_option("--families", bounds_args.families, "comma-separated family list");
    bounds_cmd->add_option("--format", bounds_args.format, "csv or json table")
        ->check(CLI::IsMember({"csv", "json"}));
    bounds_cmd->add_option("--output", bounds_args.output, "table file path");
    bounds_cmd->add_option("--plot-data", bounds_args.plot_data, "figure panel data CSV path");
    bounds_cmd->add_option("--plot-svg", bounds_args.plot_svg, "figure SVG path");
    bounds_cmd->add_option("--oracle-cap", bounds_args.oracle_cap,
                           "largest n the exhaustive oracle may enumerate");
    bounds_cmd->add_flag("--verify-oracle", bounds_args.verify_oracle,
                         "exit nonzero unless formulas match the oracle");

    OracleArgs oracle_args;
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "exhaustive (or sampled) arrangement search");
    oracle_args.tree.add_options(oracle_cmd, false);
    oracle_cmd->add_option("--cost", oracle_args.cost, "cost spec");
    oracle_cmd->add_option("--output", oracle_args.output, "result JSON path");
    oracle_cmd->add_option("--oracle-cap", oracle_args.oracle_cap,
                           "largest n the exhaustive oracle may enumerate");
    oracle_cmd->add_flag("--planar", oracle_args.planar, "search crossing-free arrangements only");
    oracle_cmd->add_option("--sample", oracle_args.sample,
                           "Monte Carlo sample count instead of exhaustive search");
    oracle_cmd->add_option("--seed", oracle_args.seed, "random seed for --sample");

    HubinessArgs hubiness_args;
    CLI::App* hubiness_cmd = app.add_subcommand("hubiness", "degree second moment and family tags");
    hubiness_args.tree.add_options(hubiness_cmd, false);
    hubiness_cmd->add_option("--output", hubiness_args.output, "result JSON path");

    try {
        app.parse(argc, argv);
        if (landscape_cmd->parsed()) return run_landscape(landscape_args);
        if (audit_cmd->parsed()) return run_audit(audit_args);
        if (bounds_cmd->parsed()) return run_bounds(bounds_args);
        if (oracle_cmd->parsed()) return run_oracle(oracle_args);
        return run_hubiness(hubiness_args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
