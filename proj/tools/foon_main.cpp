// foon — knowledge-file toolkit: validate and merge FOON text files, retrieve
// task trees for goal dishes, and tabulate per-algorithm statistics.
//
// Exit codes: 0 success, 1 unreachable goal(s), 2 parse error, 3 I/O error,
// 64 usage error.

#include <array>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "foon/core.hpp"
#include "foon/documents.hpp"
#include "foon/dot.hpp"
#include "foon/network.hpp"
#include "foon/retrieval.hpp"
#include "foon/text_format.hpp"
#include "foon/tree_document.hpp"

namespace fs = std::filesystem;
using foon::Network;
using foon::ObjectSpec;
namespace io = foon::io;
namespace retrieval = foon::retrieval;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnreachable = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct CliError {
    int code;
    std::string message;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError{kExitIo, "cannot read " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw CliError{kExitIo, "cannot read " + path};
    return buffer.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CliError{kExitIo, "cannot write " + path};
    out << content;
    if (!out) throw CliError{kExitIo, "cannot write " + path};
}

const char* severity_name(io::Severity severity) {
    return severity == io::Severity::error ? "error" : "warning";
}

void print_diagnostics(const std::string& path, const std::vector<io::ParseDiagnostic>& diagnostics,
                       std::ostream& os) {
    for (const auto& d : diagnostics) {
        os << path << ":" << d.line << ": " << severity_name(d.severity) << ": " << d.message
           << "\n";
    }
}

bool has_errors(const std::vector<io::ParseDiagnostic>& diagnostics) {
    return std::any_of(diagnostics.begin(), diagnostics.end(), [](const io::ParseDiagnostic& d) {
        return d.severity == io::Severity::error;
    });
}

std::string plural(std::size_t n, const char* noun) {
    std::string out = std::to_string(n) + " " + noun;
    if (n != 1) out += "s";
    return out;
}

// Parses every file, reporting diagnostics to stderr; throws on errors.
// Returns the merged network plus the pre-dedup unit total.
struct LoadedNetwork {
    Network network;
    std::size_t units_parsed = 0;
};

LoadedNetwork load_network(const std::vector<std::string>& paths) {
    LoadedNetwork loaded;
    bool bad = false;
    for (const auto& path : paths) {
        auto result = io::parse_foon(read_file(path));
        print_diagnostics(path, result.diagnostics, std::cerr);
        if (!result.ok()) bad = true;
        loaded.units_parsed += result.units.size();
        for (auto& unit : result.units) loaded.network.add_unit(std::move(unit));
    }
    if (bad) throw CliError{kExitParse, "FOON input has parse errors"};
    return loaded;
}

std::string slugify(std::string_view label) {
    std::string slug;
    for (unsigned char c : label) {
        slug.push_back(std::isalnum(c) ? static_cast<char>(std::tolower(c)) : '-');
    }
    return slug;
}

// ---------------------------------------------------------------------------
// validate

int cmd_validate(const std::vector<std::string>& paths) {
    bool any_errors = false;
    for (const auto& path : paths) {
        auto result = io::parse_foon(read_file(path));
        print_diagnostics(path, result.diagnostics, std::cout);
        if (!result.ok()) any_errors = true;
        std::unordered_set<std::string> objects;
        std::unordered_set<std::string> motions;
        for (const auto& unit : result.units) {
            for (const auto& node : unit.inputs) objects.insert(foon::object_key(node));
            for (const auto& node : unit.outputs) objects.insert(foon::object_key(node));
            motions.insert(unit.motion.label);
        }
        std::cout << path << ": " << plural(result.units.size(), "unit") << ", "
                  << plural(objects.size(), "object") << ", " << plural(motions.size(), "motion")
                  << "\n";
    }
    return any_errors ? kExitParse : kExitOk;
}

// ---------------------------------------------------------------------------
// merge

int cmd_merge(const std::vector<std::string>& paths, const std::string& out_path) {
    auto loaded = load_network(paths);
    write_file(out_path, io::serialize_foon(loaded.network.units()));
    std::size_t duplicates = loaded.units_parsed - loaded.network.size();
    std::cout << plural(loaded.network.size(), "unit") << " written to " << out_path << " ("
              << plural(duplicates, "duplicate") << " removed)\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// retrieve / benchmark shared loading

struct RetrieveInputs {
    Network network;
    io::Kitchen kitchen;
    std::vector<ObjectSpec> goals;
    io::MotionProfile motions;
};

struct RetrieveOptions {
    std::vector<std::string> foon_paths;
    std::string kitchen_path;
    std::string utensils_path;
    std::string goals_path;
    std::string motions_path;  // empty = none given
    std::optional<std::size_t> max_depth;
    std::string algorithm = "ids";
    std::string format = "foon";
    std::string out;
};

RetrieveInputs load_inputs(const RetrieveOptions& opts, bool needs_motion_warning) {
    RetrieveInputs inputs;
    inputs.network = load_network(opts.foon_paths).network;

    auto kitchen = io::parse_kitchen(read_file(opts.kitchen_path), read_file(opts.utensils_path));
    print_diagnostics(opts.kitchen_path, kitchen.diagnostics, std::cerr);
    if (has_errors(kitchen.diagnostics)) throw CliError{kExitParse, "kitchen document has errors"};
    inputs.kitchen = std::move(kitchen.kitchen);

    auto goals = io::parse_goal_list(read_file(opts.goals_path));
    print_diagnostics(opts.goals_path, goals.diagnostics, std::cerr);
    if (has_errors(goals.diagnostics)) throw CliError{kExitParse, "goal document has errors"};
    inputs.goals = std::move(goals.specs);

    if (!opts.motions_path.empty()) {
        inputs.motions = io::parse_motion_profile(read_file(opts.motions_path));
    } else if (needs_motion_warning) {
        std::cerr << "warning: no --motions profile given; gbfs-h1 scores every motion at "
                  << inputs.motions.default_probability << "\n";
    }
    return inputs;
}

std::string render_tree(const retrieval::TaskTree& tree, const std::string& format) {
    if (format == "json") return io::export_tree_document(tree);
    if (format == "dot") return io::export_dot(tree);
    return io::serialize_foon(tree.units);
}

void print_stats_line(const retrieval::TaskTree& tree) {
    auto stats = retrieval::tree_stats(tree);
    std::cout << stats.goal_label << ": units=" << stats.unit_count
              << " objects=" << stats.distinct_object_count << " lines=" << stats.output_lines;
    if (tree.depth_reached) std::cout << " depth=" << *tree.depth_reached;
    std::cout << "\n";
}

void report_unreachable(const ObjectSpec& goal, const retrieval::RetrievalError& error) {
    if (error.kind() == retrieval::RetrievalErrorKind::goal_not_found) {
        std::cerr << "unreachable goal: " << goal.label << " (no matching node in the network)\n";
    } else {
        std::cerr << "unreachable goal: " << goal.label << "\n";
    }
}

int cmd_retrieve(const RetrieveOptions& opts) {
    auto algorithm = retrieval::algorithm_from_string(opts.algorithm);
    if (!algorithm) throw CliError{kExitUsage, "unknown algorithm: " + opts.algorithm};

    auto inputs = load_inputs(opts, *algorithm == retrieval::Algorithm::gbfs_h1 &&
                                        opts.motions_path.empty());

    retrieval::RetrievalConfig config;
    config.algorithm = *algorithm;
    config.motion_profile = inputs.motions;
    if (opts.max_depth) {
        if (*algorithm == retrieval::Algorithm::ids) {
            config.max_depth = opts.max_depth;
        } else {
            std::cerr << "warning: --max-depth only applies to ids; ignored\n";
        }
    }

    std::error_code ec;
    fs::create_directories(opts.out, ec);
    if (ec) throw CliError{kExitIo, "cannot create output directory " + opts.out};

    std::string extension = "." + opts.format;
    std::map<std::string, std::size_t> slug_uses;
    bool any_unreachable = false;
    for (const auto& goal : inputs.goals) {
        std::string slug = slugify(goal.label);
        std::size_t uses = ++slug_uses[slug];
        if (uses > 1) slug += "-" + std::to_string(uses);
        auto path = (fs::path(opts.out) / (slug + extension)).string();
        try {
            auto tree = retrieval::retrieve(inputs.network, goal, inputs.kitchen, config);
            write_file(path, render_tree(tree, opts.format));
            print_stats_line(tree);
        } catch (const retrieval::RetrievalError& error) {
            report_unreachable(goal, error);
            any_unreachable = true;
        }
    }
    return any_unreachable ? kExitUnreachable : kExitOk;
}

// ---------------------------------------------------------------------------
// benchmark

constexpr std::array<retrieval::Algorithm, 3> kAllAlgorithms = {
    retrieval::Algorithm::ids, retrieval::Algorithm::gbfs_h1, retrieval::Algorithm::gbfs_h2};

struct BenchmarkRow {
    std::string goal_label;
    std::array<std::optional<retrieval::RetrievalStats>, 3> stats;  // by kAllAlgorithms order
};

void print_table(const std::string& title, const std::vector<BenchmarkRow>& rows,
                 std::size_t (retrieval::RetrievalStats::*field)) {
    std::vector<std::array<std::string, 4>> cells;
    cells.push_back({"goal", "ids", "gbfs-h1", "gbfs-h2"});
    for (const auto& row : rows) {
        std::array<std::string, 4> line;
        line[0] = row.goal_label;
        for (std::size_t a = 0; a < 3; ++a) {
            line[a + 1] = row.stats[a] ? std::to_string((*row.stats[a]).*field) : "—";
        }
        cells.push_back(std::move(line));
    }
    std::array<std::size_t, 4> widths{};
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 4; ++c) widths[c] = std::max(widths[c], line[c].size());
    }
    std::cout << title << "\n";
    for (const auto& line : cells) {
        for (std::size_t c = 0; c < 4; ++c) {
            std::cout << line[c];
            if (c + 1 < 4) std::cout << std::string(widths[c] - line[c].size() + 2, ' ');
        }
        std::cout << "\n";
    }
}

nlohmann::ordered_json stats_to_json(const retrieval::RetrievalStats& stats) {
    nlohmann::ordered_json out;
    out["goal"] = stats.goal_label;
    out["algorithm"] = std::string(retrieval::to_string(stats.algorithm));
    out["output_lines"] = stats.output_lines;
    out["unit_count"] = stats.unit_count;
    out["motion_count"] = stats.motion_count;
    out["distinct_object_count"] = stats.distinct_object_count;
    return out;
}

int cmd_benchmark(const RetrieveOptions& opts) {
    auto inputs = load_inputs(opts, opts.motions_path.empty());

    std::vector<BenchmarkRow> rows;
    bool any_unreachable = false;
    for (const auto& goal : inputs.goals) {
        BenchmarkRow row;
        row.goal_label = goal.label;
        for (std::size_t a = 0; a < kAllAlgorithms.size(); ++a) {
            retrieval::RetrievalConfig config;
            config.algorithm = kAllAlgorithms[a];
            config.motion_profile = inputs.motions;
            if (config.algorithm == retrieval::Algorithm::ids) config.max_depth = opts.max_depth;
            try {
                auto tree = retrieval::retrieve(inputs.network, goal, inputs.kitchen, config);
                row.stats[a] = retrieval::tree_stats(tree);
            } catch (const retrieval::RetrievalError& error) {
                if (a == 0) report_unreachable(goal, error);
                any_unreachable = true;
            }
        }
        rows.push_back(std::move(row));
    }

    print_table("Task tree output lines", rows, &retrieval::RetrievalStats::output_lines);
    std::cout << "\n";
    print_table("Task tree functional units", rows, &retrieval::RetrievalStats::unit_count);

    if (!opts.out.empty()) {
        nlohmann::ordered_json doc;
        doc["rows"] = nlohmann::ordered_json::array();
        for (const auto& row : rows) {
            nlohmann::ordered_json entry;
            entry["goal"] = row.goal_label;
            for (std::size_t a = 0; a < kAllAlgorithms.size(); ++a) {
                auto name = std::string(retrieval::to_string(kAllAlgorithms[a]));
                entry[name] = row.stats[a] ? stats_to_json(*row.stats[a])
                                           : nlohmann::ordered_json(nullptr);
            }
            doc["rows"].push_back(std::move(entry));
        }
        write_file(opts.out, doc.dump(2) + "\n");
    }
    return any_unreachable ? kExitUnreachable : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FOON knowledge-file toolkit: parse, merge, and retrieve task trees"};
    app.require_subcommand(1);

    std::vector<std::string> validate_paths;
    auto* validate = app.add_subcommand("validate", "Parse FOON files and report diagnostics");
    validate->add_option("paths", validate_paths, "FOON text files")->required();

    std::vector<std::string> merge_paths;
    std::string merge_out;
    auto* merge = app.add_subcommand("merge", "Merge FOON files into a universal network");
    merge->add_option("paths", merge_paths, "FOON text files")->required();
    merge->add_option("--out", merge_out, "output FOON file")->required();

    RetrieveOptions retrieve_opts;
    auto* retrieve = app.add_subcommand("retrieve", "Retrieve a task tree per goal");
    retrieve->add_option("--foon", retrieve_opts.foon_paths, "FOON text files")->required();
    retrieve->add_option("--kitchen", retrieve_opts.kitchen_path, "kitchen items JSON")->required();
    retrieve->add_option("--utensils", retrieve_opts.utensils_path, "utensils text file")
        ->required();
    retrieve->add_option("--goals", retrieve_opts.goals_path, "goal list JSON")->required();
    retrieve->add_option("--algorithm", retrieve_opts.algorithm, "ids, gbfs-h1 or gbfs-h2")
        ->required()
        ->check(CLI::IsMember({"ids", "gbfs-h1", "gbfs-h2"}));
    retrieve->add_option("--motions", retrieve_opts.motions_path, "motion probability JSON");
    retrieve->add_option("--max-depth", retrieve_opts.max_depth, "IDS depth cap");
    retrieve->add_option("--format", retrieve_opts.format, "foon, json or dot")
        ->check(CLI::IsMember({"foon", "json", "dot"}));
    retrieve->add_option("--out", retrieve_opts.out, "output directory")->required();

    RetrieveOptions bench_opts;
    auto* benchmark =
        app.add_subcommand("benchmark", "Run all three algorithms and tabulate statistics");
    benchmark->add_option("--foon", bench_opts.foon_paths, "FOON text files")->required();
    benchmark->add_option("--kitchen", bench_opts.kitchen_path, "kitchen items JSON")->required();
    benchmark->add_option("--utensils", bench_opts.utensils_path, "utensils text file")
        ->required();
    benchmark->add_option("--goals", bench_opts.goals_path, "goal list JSON")->required();
    benchmark->add_option("--motions", bench_opts.motions_path, "motion probability JSON");
    benchmark->add_option("--max-depth", bench_opts.max_depth, "IDS depth cap");
    benchmark->add_option("--out", bench_opts.out, "write benchmark rows as JSON to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_paths);
        if (merge->parsed()) return cmd_merge(merge_paths, merge_out);
        if (retrieve->parsed()) return cmd_retrieve(retrieve_opts);
        if (benchmark->parsed()) return cmd_benchmark(bench_opts);
    } catch (const CliError& e) {
        std::cerr << e.message << "\n";
        return e.code;
    } catch (const io::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}
