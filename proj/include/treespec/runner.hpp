#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "treespec/checkers.hpp"
#include "treespec/graph.hpp"

namespace treespec {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

enum class Family { Trees, Unicyclic, ConnectedRandom, Complete, Cycles };

const char* to_string(Family family);
std::optional<Family> family_from_string(const std::string& name);

struct GeneratorSpec {
    Family family;
    int size_min;
    int size_max;
    int count = 0;  // 0 = one graph per size in the range
    std::uint64_t seed = 0;
    double edge_prob = 0.5;  // ConnectedRandom only
};

std::vector<Graph> generate_corpus(const GeneratorSpec& spec);
std::vector<Graph> load_corpus_file(const std::string& path);

enum class OutputFormat { Json, Csv, Human };

struct RunConfig {
    std::optional<std::string> corpus_file;
    std::optional<GeneratorSpec> generator;
    std::vector<Claim> checks;  // empty = all
    int jobs = 1;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> out_path;
    bool fail_fast = false;
    std::uint64_t seed = 0;  // also seeds the lemma checkers' sampled pairs
};

struct GraphRecord {
    int index;
    std::string graph6;
    std::vector<Verdict> verdicts;
};

struct AggregateRow {
    int holds = 0;
    int violated = 0;
    int not_applicable = 0;
    int tight = 0;
};

struct RunReport {
    std::vector<GraphRecord> records;
    std::vector<std::pair<Claim, AggregateRow>> aggregate;  // in claim order
    int violated_total = 0;
    double wall_time_ms = 0.0;
    RunConfig config;
};

// Runs the selected checkers over the corpus with a bounded worker pool.
// Report content is deterministic for a fixed config regardless of jobs.
RunReport run_verify(const RunConfig& config);

// Serializations. JSON excludes the parallelism degree so that reports are
// byte-identical across --jobs values; wall_time_ms is the only
// run-dependent field.
nlohmann::json report_to_json(const RunReport& report);
std::string report_to_csv(const RunReport& report);
std::string report_to_human(const RunReport& report);

// Full single-graph report: invariants, spectra, Smith form, all verdicts.
nlohmann::json analyze_graph(const Graph& g, const CheckOptions& opts = {});
std::string analyze_to_human(const nlohmann::json& analysis);

}  // namespace treespec
