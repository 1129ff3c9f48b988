#include "treespec/runner.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "treespec/error.hpp"
#include "treespec/graph6.hpp"
#include "treespec/rng.hpp"

namespace treespec {

using nlohmann::json;

const char* to_string(Family family) {
    switch (family) {
        case Family::Trees: return "trees";
        case Family::Unicyclic: return "unicyclic";
        case Family::ConnectedRandom: return "connected-random";
        case Family::Complete: return "complete";
        case Family::Cycles: return "cycles";
    }
    return "unknown";
}

std::optional<Family> family_from_string(const std::string& name) {
    for (Family f : {Family::Trees, Family::Unicyclic, Family::ConnectedRandom, Family::Complete,
                     Family::Cycles})
        if (name == to_string(f)) return f;
    return std::nullopt;
}

std::vector<Graph> generate_corpus(const GeneratorSpec& spec) {
    if (spec.size_min < 1 || spec.size_max < spec.size_min)
        throw Error(ErrorKind::InvalidArgument, "invalid size range");
    const int span = spec.size_max - spec.size_min + 1;
    const int count = spec.count > 0 ? spec.count : span;

    Rng size_rng(derive_seed(spec.seed, 0x5a17e));
    std::vector<Graph> out;
    out.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        std::uint64_t graph_seed = derive_seed(spec.seed, static_cast<std::uint64_t>(i));
        int n;
        switch (spec.family) {
            case Family::Complete:
            case Family::Cycles:
                n = spec.size_min + i % span;  // deterministic families sweep the range
                break;
            default:
                n = spec.size_min + static_cast<int>(size_rng.below(static_cast<std::uint64_t>(span)));
        }
        switch (spec.family) {
            case Family::Trees: out.push_back(random_tree(n, graph_seed)); break;
            case Family::Unicyclic: out.push_back(random_unicyclic(n, graph_seed)); break;
            case Family::ConnectedRandom:
                out.push_back(random_connected(n, spec.edge_prob, graph_seed));
                break;
            case Family::Complete: out.push_back(complete_graph(n)); break;
            case Family::Cycles: out.push_back(cycle(n)); break;
        }
    }
    return out;
}

std::vector<Graph> load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open corpus file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_graph6_lines(buffer.str());
}

namespace {

std::vector<Claim> selected_claims(const RunConfig& config) {
    return config.checks.empty() ? all_claims() : config.checks;
}

}  // namespace

RunReport run_verify(const RunConfig& config) {
    auto start = std::chrono::steady_clock::now();

    std::vector<Graph> corpus;
    if (config.corpus_file)
        corpus = load_corpus_file(*config.corpus_file);
    else if (config.generator)
        corpus = generate_corpus(*config.generator);
    else
        throw Error(ErrorKind::InvalidArgument, "verify needs a corpus file or a generator spec");

    const std::vector<Claim> claims = selected_claims(config);
    CharPolyMemo memo;

    RunReport report;
    report.config = config;
    report.records.assign(corpus.size(), {});

    const int jobs = std::max(1, config.jobs);
    std::atomic<size_t> next{0};
    std::atomic<long long> first_violated{-1};

    auto worker = [&]() {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            long long stop_at = first_violated.load();
            if (config.fail_fast && stop_at >= 0 && static_cast<long long>(i) > stop_at) continue;

            GraphRecord rec;
            rec.index = static_cast<int>(i);
            rec.graph6 = to_graph6(corpus[i]);
            CheckOptions opts;
            opts.memo = &memo;
            opts.pair_seed = derive_seed(config.seed, static_cast<std::uint64_t>(i) ^ 0x52535053ULL);
            bool violated = false;
            for (Claim claim : claims) {
                rec.verdicts.push_back(run_check(claim, corpus[i], opts));
                if (rec.verdicts.back().status == Status::VIOLATED) violated = true;
            }
            report.records[i] = std::move(rec);
            if (violated && config.fail_fast) {
                long long expected = first_violated.load();
                long long mine = static_cast<long long>(i);
                while ((expected < 0 || expected > mine) &&
                       !first_violated.compare_exchange_weak(expected, mine)) {
                }
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // fail-fast truncates deterministically at the lowest violating index
    long long cut = first_violated.load();
    if (config.fail_fast && cut >= 0)
        report.records.resize(static_cast<size_t>(cut) + 1);

    for (Claim claim : claims) report.aggregate.emplace_back(claim, AggregateRow{});
    for (const GraphRecord& rec : report.records) {
        for (const Verdict& v : rec.verdicts) {
            for (auto& [claim, row] : report.aggregate) {
                if (claim != v.claim) continue;
                switch (v.status) {
                    case Status::HOLDS: ++row.holds; break;
                    case Status::VIOLATED: ++row.violated; break;
                    case Status::NOT_APPLICABLE: ++row.not_applicable; break;
                }
                if (v.tight) ++row.tight;
            }
            if (v.status == Status::VIOLATED) ++report.violated_total;
        }
    }

    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

namespace {

json verdict_to_json(const Verdict& v) {
    return {{"claim", to_string(v.claim)},
            {"status", to_string(v.status)},
            {"tight", v.tight},
            {"witness", v.witness}};
}

json config_to_json(const RunConfig& config) {
    // deliberately omits the parallelism degree and output path: report
    // content must be identical across --jobs values
    json out;
    if (config.corpus_file) out["corpus"] = *config.corpus_file;
    if (config.generator) {
        const GeneratorSpec& gen = *config.generator;
        out["generator"] = {{"family", to_string(gen.family)},
                            {"size_min", gen.size_min},
                            {"size_max", gen.size_max},
                            {"count", gen.count},
                            {"seed", gen.seed}};
        if (gen.family == Family::ConnectedRandom) out["generator"]["edge_prob"] = gen.edge_prob;
    }
    json checks = json::array();
    for (Claim c : selected_claims(config)) checks.push_back(to_string(c));
    out["checks"] = checks;
    out["seed"] = config.seed;
    out["fail_fast"] = config.fail_fast;
    return out;
}

}  // namespace

json report_to_json(const RunReport& report) {
    json graphs = json::array();
    for (const GraphRecord& rec : report.records) {
        json verdicts = json::array();
        for (const Verdict& v : rec.verdicts) verdicts.push_back(verdict_to_json(v));
        graphs.push_back({{"index", rec.index}, {"graph6", rec.graph6}, {"verdicts", verdicts}});
    }
    json aggregate;
    for (const auto& [claim, row] : report.aggregate)
        aggregate[to_string(claim)] = {{"holds", row.holds},
                                       {"violated", row.violated},
                                       {"not_applicable", row.not_applicable},
                                       {"tight", row.tight}};
    return {{"schema", kReportSchema},
            {"tool", "treespec"},
            {"version", kToolVersion},
            {"config", config_to_json(report.config)},
            {"graphs", graphs},
            {"aggregate", aggregate},
            {"violated_total", report.violated_total},
            {"wall_time_ms", report.wall_time_ms}};
}

std::string report_to_csv(const RunReport& report) {
    std::ostringstream out;
    out << "index,graph6,claim,status,tight,witness\n";
    for (const GraphRecord& rec : report.records) {
        for (const Verdict& v : rec.verdicts) {
            std::string witness = v.witness.dump();
            std::string escaped;
            escaped.reserve(witness.size());
            for (char c : witness) {
                if (c == '"') escaped += "\"\"";
                else escaped += c;
            }
            out << rec.index << ',' << rec.graph6 << ',' << to_string(v.claim) << ','
                << to_string(v.status) << ',' << (v.tight ? "true" : "false") << ",\"" << escaped
                << "\"\n";
        }
    }
    return out.str();
}

std::string report_to_human(const RunReport& report) {
    std::ostringstream out;
    out << "graphs: " << report.records.size() << "\n";
    out << "claim                 holds  violated  n/a    tight\n";
    for (const auto& [claim, row] : report.aggregate) {
        std::string name = to_string(claim);
        name.resize(20, ' ');
        out << name << "  " << row.holds << "      " << row.violated << "         " << row.not_applicable
            << "      " << row.tight << "\n";
    }
    out << (report.violated_total == 0 ? "all claims hold\n" : "VIOLATIONS FOUND\n");
    for (const GraphRecord& rec : report.records)
        for (const Verdict& v : rec.verdicts)
            if (v.status == Status::VIOLATED)
                out << "VIOLATED " << to_string(v.claim) << " on " << rec.graph6 << ": "
                    << v.witness.dump() << "\n";
    return out.str();
}

json analyze_graph(const Graph& g, const CheckOptions& opts) {
    json out;
    out["schema"] = kReportSchema;
    out["graph6"] = to_graph6(g);
    out["order"] = g.order();
    out["size"] = g.edge_count();
    out["connected"] = is_connected(g);
    out["bipartite"] = is_bipartite(g);

    BigInt tau = is_connected(g) ? spanning_tree_count(g) : BigInt(0);
    out["tau"] = tau.str();
    if (tau > 0) {
        TreeCountFactored f = factor_tree_count(tau);
        out["tau_t"] = f.t;
        out["tau_s"] = f.s.str();
    }

    auto spectrum_block = [](const IntMatrix& m) {
        IntegerSpectrum s = integer_eigenvalues(char_poly(m));
        json eig = json::array();
        for (const auto& e : s.entries)
            eig.push_back({{"value", e.eigenvalue.str()}, {"multiplicity", e.multiplicity}});
        json residual = json::array();
        for (const BigInt& c : s.residual.coefficients()) residual.push_back(c.str());
        return json{{"integer_eigenvalues", eig}, {"residual_coefficients", residual}};
    };
    out["spectrum_A"] = spectrum_block(adjacency(g));
    out["spectrum_L"] = spectrum_block(laplacian(g));
    out["spectrum_Q"] = spectrum_block(signless_laplacian(g));
    if (g.edge_count() >= 1) {
        IntMatrix la = adjacency(line_graph(g));
        out["spectrum_line_A"] = spectrum_block(la);
        out["rank2_line_A"] = rank_gf2(la);
    }

    SmithForm snf = smith_normal_form(laplacian(g));
    json factors = json::array();
    for (const BigInt& s : snf.invariant_factors) factors.push_back(s.str());
    out["smith_invariants_L"] = factors;

    json verdicts = json::array();
    for (Claim claim : all_claims()) verdicts.push_back(verdict_to_json(run_check(claim, g, opts)));
    out["verdicts"] = verdicts;
    return out;
}

std::string analyze_to_human(const json& analysis) {
    std::ostringstream out;
    out << "graph6:     " << analysis["graph6"].get<std::string>() << "\n";
    out << "order:      " << analysis["order"] << "\n";
    out << "size:       " << analysis["size"] << "\n";
    out << "connected:  " << (analysis["connected"].get<bool>() ? "yes" : "no") << "\n";
    out << "bipartite:  " << (analysis["bipartite"].get<bool>() ? "yes" : "no") << "\n";
    out << "tau:        " << analysis["tau"].get<std::string>();
    if (analysis.contains("tau_t"))
        out << " = 2^" << analysis["tau_t"] << " * " << analysis["tau_s"].get<std::string>();
    out << "\n";
    auto spectrum_line = [&](const char* key, const char* label) {
        if (!analysis.contains(key)) return;
        out << label << ": ";
        for (const auto& e : analysis[key]["integer_eigenvalues"])
            out << e["value"].get<std::string>() << "^" << e["multiplicity"] << " ";
        out << "\n";
    };
    spectrum_line("spectrum_A", "A integer spectrum     ");
    spectrum_line("spectrum_L", "L integer spectrum     ");
    spectrum_line("spectrum_Q", "Q integer spectrum     ");
    spectrum_line("spectrum_line_A", "A(L(G)) integer spectrum");
    if (analysis.contains("rank2_line_A"))
        out << "rank_2(A(L(G))): " << analysis["rank2_line_A"] << "\n";
    out << "Smith invariants of L: [";
    bool first = true;
    for (const auto& s : analysis["smith_invariants_L"]) {
        if (!first) out << ", ";
        out << s.get<std::string>();
        first = false;
    }
    out << "]\n";
    for (const auto& v : analysis["verdicts"]) {
        out << "  " << v["claim"].get<std::string>() << ": " << v["status"].get<std::string>();
        if (v["tight"].get<bool>()) out << " (TIGHT)";
        out << "\n";
    }
    return out.str();
}

}  // namespace treespec
