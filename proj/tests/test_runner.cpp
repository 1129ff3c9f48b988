#include <doctest.h>

#include <fstream>
#include <regex>

#include "test_util.hpp"
#include "treespec/error.hpp"
#include "treespec/graph6.hpp"
#include "treespec/runner.hpp"

using namespace treespec;

namespace {

std::string strip_wall_time(std::string text) {
    static const std::regex wall(R"("wall_time_ms":\s*[0-9.eE+-]+)");
    return std::regex_replace(text, wall, R"("wall_time_ms":0)");
}

}  // namespace

TEST_CASE("generated corpora are deterministic and shaped as requested") {
    GeneratorSpec trees{Family::Trees, 8, 8, 3, 5, 0.5};
    auto a = generate_corpus(trees);
    auto b = generate_corpus(trees);
    REQUIRE(a.size() == 3);
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].order() == 8);
        CHECK(a[i].edge_count() == 7);
        CHECK(is_connected(a[i]));
    }

    GeneratorSpec k6{Family::Complete, 6, 6, 1, 0, 0.5};
    auto complete = generate_corpus(k6);
    REQUIRE(complete.size() == 1);
    CHECK(complete[0] == complete_graph(6));

    GeneratorSpec uni{Family::Unicyclic, 5, 7, 10, 9, 0.5};
    auto unicyclic = generate_corpus(uni);
    REQUIRE(unicyclic.size() == 10);
    for (const Graph& g : unicyclic) {
        CHECK(g.edge_count() == g.order());
        CHECK(is_connected(g));
        CHECK(g.order() >= 5);
        CHECK(g.order() <= 7);
    }

    GeneratorSpec cycles{Family::Cycles, 3, 5, 0, 0, 0.5};
    auto cy = generate_corpus(cycles);
    REQUIRE(cy.size() == 3);  // default count = one per size
    CHECK(cy[0] == cycle(3));
    CHECK(cy[2] == cycle(5));
}

TEST_CASE("corpus files skip comments and blank lines") {
    std::string path = "/tmp/treespec_test_corpus.g6";
    {
        std::ofstream out(path);
        out << "# a comment\n\nBw\nB?\n";
    }
    auto graphs = load_corpus_file(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].edge_count() == 3);
    CHECK(graphs[1].edge_count() == 0);
    CHECK_THROWS_AS(load_corpus_file("/nonexistent/path.g6"), Error);
}

TEST_CASE("verify produces a consistent report") {
    RunConfig config;
    config.generator = GeneratorSpec{Family::Cycles, 3, 8, 0, 0, 0.5};
    config.seed = 42;
    RunReport report = run_verify(config);
    REQUIRE(report.records.size() == 6);
    CHECK(report.violated_total == 0);

    // aggregates equal the per-record sums
    for (const auto& [claim, row] : report.aggregate) {
        int holds = 0, violated = 0, na = 0, tight = 0;
        for (const auto& rec : report.records)
            for (const Verdict& v : rec.verdicts) {
                if (v.claim != claim) continue;
                if (v.status == Status::HOLDS) ++holds;
                if (v.status == Status::VIOLATED) ++violated;
                if (v.status == Status::NOT_APPLICABLE) ++na;
                if (v.tight) ++tight;
            }
        CHECK(row.holds == holds);
        CHECK(row.violated == violated);
        CHECK(row.not_applicable == na);
        CHECK(row.tight == tight);
    }

    // every record's graph6 re-parses
    for (const auto& rec : report.records) CHECK(parse_graph6(rec.graph6).order() >= 3);
}

TEST_CASE("reports are byte-identical across parallelism degrees") {
    RunConfig config;
    config.generator = GeneratorSpec{Family::Trees, 4, 9, 12, 7, 0.5};
    config.seed = 7;

    config.jobs = 1;
    std::string serial = strip_wall_time(report_to_json(run_verify(config)).dump(2));
    config.jobs = 4;
    std::string parallel = strip_wall_time(report_to_json(run_verify(config)).dump(2));
    CHECK(serial == parallel);

    config.jobs = 3;
    std::string csv1 = report_to_csv(run_verify(config));
    config.jobs = 1;
    std::string csv2 = report_to_csv(run_verify(config));
    CHECK(csv1 == csv2);
}

TEST_CASE("fail-fast with no violations matches the full run") {
    RunConfig config;
    config.generator = GeneratorSpec{Family::Trees, 4, 8, 10, 3, 0.5};
    config.seed = 3;
    config.checks = {Claim::THM_TPLUS1_Q, Claim::SNF_TAU};
    RunReport full = run_verify(config);
    config.fail_fast = true;
    config.jobs = 4;
    RunReport ff = run_verify(config);
    CHECK(full.records.size() == ff.records.size());
    CHECK(report_to_csv(full) == report_to_csv(ff));
}

TEST_CASE("checker selection narrows the report") {
    RunConfig config;
    config.generator = GeneratorSpec{Family::Cycles, 4, 4, 1, 0, 0.5};
    config.checks = {Claim::THM_DOOB, Claim::SNF_TAU};
    RunReport report = run_verify(config);
    REQUIRE(report.records.size() == 1);
    REQUIRE(report.records[0].verdicts.size() == 2);
    CHECK(report.records[0].verdicts[0].claim == Claim::THM_DOOB);
    CHECK(report.records[0].verdicts[1].claim == Claim::SNF_TAU);
    CHECK(report.aggregate.size() == 2);
}

TEST_CASE("analyze report fields") {
    nlohmann::json a = analyze_graph(complete_graph(6));
    CHECK(a["tau"] == "1296");
    CHECK(a["tau_t"] == 4);
    CHECK(a["tau_s"] == "81");
    CHECK(a["connected"] == true);
    CHECK(a["bipartite"] == false);
    CHECK(a["order"] == 6);
    CHECK(a["size"] == 15);
    CHECK(a["smith_invariants_L"].size() == 5);

    bool found_tight = false;
    for (const auto& v : a["verdicts"])
        if (v["claim"] == "THM_TPLUS1_Q") {
            CHECK(v["status"] == "HOLDS");
            CHECK(v["tight"] == true);
            found_tight = true;
        }
    CHECK(found_tight);

    nlohmann::json d = analyze_graph(test_util::two_k2());
    CHECK(d["connected"] == false);
    CHECK(d["tau"] == "0");
    CHECK_FALSE(d.contains("tau_t"));
    for (const auto& v : d["verdicts"])
        if (v["claim"] == "THM_DOOB") CHECK(v["status"] == "NOT_APPLICABLE");

    // human rendering shouldn't throw
    CHECK(analyze_to_human(a).size() > 0);
}

TEST_CASE("csv rows are one per verdict") {
    RunConfig config;
    config.generator = GeneratorSpec{Family::Cycles, 3, 4, 0, 0, 0.5};
    config.checks = {Claim::EQ1_SHIFT, Claim::THM_DOOB};
    RunReport report = run_verify(config);
    std::string csv = report_to_csv(report);
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + 2 * 2);  // header + 2 graphs x 2 claims
}
