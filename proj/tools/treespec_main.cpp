#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <type_traits>

#include <CLI11.hpp>

#include "treespec/error.hpp"
#include "treespec/graph6.hpp"
#include "treespec/runner.hpp"

namespace {

using treespec::Claim;
using treespec::RunConfig;

int parse_sizes(const std::string& text, int& lo, int& hi) {
    auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, dots));
            hi = std::stoi(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        return -1;
    }
    return 0;
}

std::vector<Claim> parse_checks(const std::string& list) {
    std::vector<Claim> out;
    if (list == "all" || list == "ALL" || list.empty()) return out;
    size_t pos = 0;
    while (pos <= list.size()) {
        size_t comma = list.find(',', pos);
        std::string name = list.substr(pos, comma == std::string::npos ? comma : comma - pos);
        auto claim = treespec::claim_from_string(name);
        if (!claim) throw treespec::Error(treespec::ErrorKind::InvalidArgument, "unknown check: " + name);
        out.push_back(*claim);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw treespec::Error(treespec::ErrorKind::IoError, "cannot write " + out_path);
    out << content;
    if (!content.empty() && content.back() != '\n') out << "\n";
}

int run_analyze(const std::string& input, const std::string& format, const std::string& out_path) {
    std::vector<treespec::Graph> graphs;
    if (std::filesystem::exists(input))
        graphs = treespec::load_corpus_file(input);
    else
        graphs.push_back(treespec::parse_graph6(input));

    treespec::CharPolyMemo memo;
    treespec::CheckOptions opts;
    opts.memo = &memo;

    if (format == "human") {
        std::string text;
        for (const auto& g : graphs) {
            text += treespec::analyze_to_human(treespec::analyze_graph(g, opts));
            text += "\n";
        }
        write_output(text, out_path);
        return 0;
    }
    if (graphs.size() == 1) {
        write_output(treespec::analyze_graph(graphs[0], opts).dump(2), out_path);
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& g : graphs) arr.push_back(treespec::analyze_graph(g, opts));
        write_output(arr.dump(2), out_path);
    }
    return 0;
}

// Flat "key = value" file; '#' starts a comment. Keys mirror the verify
// flags 1:1; command-line flags override file values.
std::map<std::string, std::string> parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw treespec::Error(treespec::ErrorKind::IoError, "cannot read config " + path);
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string t = trim(line);
        if (t.empty()) continue;
        auto eq = t.find('=');
        if (eq == std::string::npos)
            throw treespec::Error(treespec::ErrorKind::InvalidArgument,
                                  "config line " + std::to_string(lineno) + " is not key = value");
        std::string value = trim(t.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"')
            value = value.substr(1, value.size() - 2);
        out[trim(t.substr(0, eq))] = value;
    }
    return out;
}

int run_verify_cmd(const RunConfig& config) {
    treespec::RunReport report = treespec::run_verify(config);
    std::string content;
    switch (config.format) {
        case treespec::OutputFormat::Json: content = treespec::report_to_json(report).dump(2); break;
        case treespec::OutputFormat::Csv: content = treespec::report_to_csv(report); break;
        case treespec::OutputFormat::Human: content = treespec::report_to_human(report); break;
    }
    write_output(content, config.out_path.value_or(""));
    return report.violated_total > 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spectral and combinatorial invariants of graphs, with theorem verification"};
    app.require_subcommand(1);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "full invariant report for one graph (or a file)");
    std::string analyze_input;
    std::string analyze_format = "json";
    std::string analyze_out;
    analyze->add_option("graph", analyze_input, "graph6 string, or path to a graph6 file")->required();
    analyze->add_option("--format", analyze_format, "json|human")
        ->check(CLI::IsMember({"json", "human"}));
    analyze->add_option("--out", analyze_out, "write the report to a file");

    // verify
    auto* verify = app.add_subcommand("verify", "run theorem checkers over a corpus");
    std::string config_path;
    std::string corpus_file, family_name, sizes = "3..8", checks = "all", format_name = "json", out_path;
    int count = 0, jobs = 1;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
    bool fail_fast = false;
    verify->add_option("--config", config_path, "flat key = value file mirroring the flags; flags win");
    auto* opt_corpus = verify->add_option("--corpus", corpus_file, "graph6 corpus file");
    auto* opt_family =
        verify->add_option("--family", family_name, "trees|unicyclic|connected-random|complete|cycles");
    auto* opt_sizes = verify->add_option("--sizes", sizes, "size range A..B (or a single size)");
    auto* opt_count =
        verify->add_option("--count", count, "number of graphs to generate (default: one per size)");
    auto* opt_seed = verify->add_option("--seed", seed, "generator seed (mandatory for random families)");
    auto* opt_edge_prob =
        verify->add_option("--edge-prob", edge_prob, "edge probability for connected-random");
    auto* opt_checks = verify->add_option("--checks", checks, "comma-separated claim list, or 'all'");
    auto* opt_jobs = verify->add_option("--jobs", jobs, "parallel workers")->envname("TREESPEC_JOBS");
    auto* opt_format = verify->add_option("--format", format_name, "json|csv|human")
                           ->check(CLI::IsMember({"json", "csv", "human"}));
    auto* opt_out = verify->add_option("--out", out_path, "write the report to a file");
    auto* opt_fail_fast = verify->add_flag("--fail-fast", fail_fast, "stop at the first violated claim");

    // generate
    auto* generate = app.add_subcommand("generate", "emit graph6 lines for a generated corpus");
    std::string gen_family, gen_sizes = "3..8";
    int gen_count = 0;
    std::uint64_t gen_seed = 0;
    double gen_edge_prob = 0.5;
    generate->add_option("--family", gen_family, "trees|unicyclic|connected-random|complete|cycles")
        ->required();
    generate->add_option("--sizes", gen_sizes, "size range A..B");
    generate->add_option("--count", gen_count, "number of graphs (default: one per size)");
    auto* gen_opt_seed = generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--edge-prob", gen_edge_prob, "edge probability for connected-random");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) return run_analyze(analyze_input, analyze_format, analyze_out);

        if (verify->parsed()) {
            bool seed_given = opt_seed->count() > 0;
            if (!config_path.empty()) {
                auto file = parse_config_file(config_path);
                seed_given = seed_given || file.count("seed") > 0;
                auto apply = [&](const char* key, CLI::Option* opt, auto& target) {
                    auto it = file.find(key);
                    if (it == file.end()) return;
                    if (opt->count() > 0) return;  // flags override the file
                    using T = std::decay_t<decltype(target)>;
                    if constexpr (std::is_same_v<T, std::string>) {
                        target = it->second;
                    } else if constexpr (std::is_same_v<T, bool>) {
                        target = it->second == "true" || it->second == "1" || it->second == "yes";
                    } else {
                        std::istringstream stream(it->second);
                        stream >> target;
                        if (stream.fail())
                            throw treespec::Error(treespec::ErrorKind::InvalidArgument,
                                                  std::string("bad config value for ") + key);
                    }
                };
                apply("corpus", opt_corpus, corpus_file);
                apply("family", opt_family, family_name);
                apply("sizes", opt_sizes, sizes);
                apply("count", opt_count, count);
                apply("seed", opt_seed, seed);
                apply("edge-prob", opt_edge_prob, edge_prob);
                apply("checks", opt_checks, checks);
                apply("jobs", opt_jobs, jobs);
                apply("format", opt_format, format_name);
                apply("out", opt_out, out_path);
                apply("fail-fast", opt_fail_fast, fail_fast);
                for (const auto& [key, value] : file) {
                    static const std::set<std::string> known = {
                        "corpus", "family", "sizes",  "count", "seed",     "edge-prob",
                        "checks", "jobs",   "format", "out",   "fail-fast"};
                    if (!known.count(key))
                        throw treespec::Error(treespec::ErrorKind::InvalidArgument,
                                              "unknown config key: " + key);
                }
            }
            RunConfig config;
            if (!corpus_file.empty()) {
                config.corpus_file = corpus_file;
            } else if (!family_name.empty()) {
                auto family = treespec::family_from_string(family_name);
                if (!family) {
                    std::cerr << "error: unknown family '" << family_name << "'\n";
                    return 2;
                }
                bool random_family = *family == treespec::Family::Trees ||
                                     *family == treespec::Family::Unicyclic ||
                                     *family == treespec::Family::ConnectedRandom;
                if (random_family && !seed_given) {
                    std::cerr << "error: --seed is mandatory for random generator corpora\n";
                    return 2;
                }
                treespec::GeneratorSpec gen;
                gen.family = *family;
                if (parse_sizes(sizes, gen.size_min, gen.size_max) != 0) {
                    std::cerr << "error: bad --sizes '" << sizes << "'\n";
                    return 2;
                }
                gen.count = count;
                gen.seed = seed;
                gen.edge_prob = edge_prob;
                config.generator = gen;
            } else {
                std::cerr << "error: verify needs --corpus or --family\n";
                return 2;
            }
            config.checks = parse_checks(checks);
            config.jobs = jobs;
            config.seed = seed;
            config.fail_fast = fail_fast;
            if (format_name == "csv") config.format = treespec::OutputFormat::Csv;
            else if (format_name == "human") config.format = treespec::OutputFormat::Human;
            else config.format = treespec::OutputFormat::Json;
            if (!out_path.empty()) config.out_path = out_path;
            return run_verify_cmd(config);
        }

        if (generate->parsed()) {
            auto family = treespec::family_from_string(gen_family);
            if (!family) {
                std::cerr << "error: unknown family '" << gen_family << "'\n";
                return 2;
            }
            bool random_family = *family == treespec::Family::Trees ||
                                 *family == treespec::Family::Unicyclic ||
                                 *family == treespec::Family::ConnectedRandom;
            if (random_family && gen_opt_seed->count() == 0) {
                std::cerr << "error: --seed is mandatory for random generator corpora\n";
                return 2;
            }
            treespec::GeneratorSpec gen;
            gen.family = *family;
            if (parse_sizes(gen_sizes, gen.size_min, gen.size_max) != 0) {
                std::cerr << "error: bad --sizes '" << gen_sizes << "'\n";
                return 2;
            }
            gen.count = gen_count;
            gen.seed = gen_seed;
            gen.edge_prob = gen_edge_prob;
            for (const auto& g : treespec::generate_corpus(gen))
                std::cout << treespec::to_graph6(g) << "\n";
            return 0;
        }
    } catch (const treespec::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
