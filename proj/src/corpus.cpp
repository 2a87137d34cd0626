#include "nsp/corpus.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <regex>

#include "nsp/fixtures.hpp"
#include "nsp/io.hpp"
#include "nsp/layer_dp.hpp"
#include "nsp/oracle.hpp"
#include "nsp/solver.hpp"

namespace nsp {

namespace {

void note(std::string& slot, const std::string& message) {
    if (slot.empty()) slot = message;
}

std::vector<std::pair<int, int>> pair_order(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    return pairs;
}

Graph graph_from_code(int n, const std::vector<std::pair<int, int>>& pairs, unsigned long code) {
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 0; t < pairs.size(); ++t) {
        if (code & (1ul << t)) edges.push_back(pairs[t]);
    }
    return Graph(n, edges);
}

}  // namespace

void CorpusStats::merge(const CorpusStats& other) {
    instances += other.instances;
    verdict_mismatches += other.verdict_mismatches;
    cert_failures += other.cert_failures;
    exact_length_cases += other.exact_length_cases;
    exact_length_mismatches += other.exact_length_mismatches;
    straighten_reduced += other.straighten_reduced;
    straighten_found += other.straighten_found;
    straighten_failures += other.straighten_failures;
    note(first_failure, other.first_failure);
}

void check_instance(const Graph& g, int u, int v, const std::string& label, bool exact_lengths,
                    CorpusStats& stats) {
    ++stats.instances;
    std::vector<int> lengths = induced_length_set(g, u, v);
    const bool reachable = !lengths.empty();
    const bool oracle_yes = reachable && lengths.back() > lengths.front();

    NspOutcome outcome = find_nsp(g, u, v);
    if (outcome.has_nsp() != oracle_yes) {
        ++stats.verdict_mismatches;
        note(stats.first_failure, label + ": verdict mismatch");
    }
    if (outcome.has_nsp() && !verify_nsp(g, u, v, *outcome.certificate)) {
        ++stats.cert_failures;
        note(stats.first_failure, label + ": certificate failed verification");
    }

    if (u != v && reachable) {
        StraightenResult reduced = straighten(g, u, v);
        if (const auto* path = std::get_if<Path>(&reduced)) {
            ++stats.straighten_found;
            if (!verify_nsp(g, u, v, *path)) {
                ++stats.straighten_failures;
                note(stats.first_failure, label + ": straighten certificate invalid");
            }
        } else {
            ++stats.straighten_reduced;
            const Reduction& red = std::get<Reduction>(reduced);
            std::vector<int> f = straight_set(red.final_graph, red.final_u, red.final_v);
            if (static_cast<int>(f.size()) != red.final_graph.vertex_count()) {
                ++stats.straighten_failures;
                note(stats.first_failure, label + ": reduced graph not all straight");
            } else if (oracle_has_nsp(red.final_graph, red.final_u, red.final_v) != oracle_yes) {
                ++stats.straighten_failures;
                note(stats.first_failure, label + ": reduction changed the answer");
            }
        }

        if (exact_lengths) {
            const int dist = lengths.front();
            for (int k = 0; k <= 3; ++k) {
                ++stats.exact_length_cases;
                bool want = std::binary_search(lengths.begin(), lengths.end(), dist + k);
                auto path = exact_length_path(g, u, v, k);
                bool ok = path.has_value() == want;
                if (path) {
                    ok = ok && static_cast<int>(path->size()) - 1 == dist + k &&
                         path->front() == u && path->back() == v && is_induced_path(g, *path);
                }
                if (!ok) {
                    ++stats.exact_length_mismatches;
                    note(stats.first_failure,
                         label + ": exact-length mismatch at k=" + std::to_string(k));
                }
            }
        }
    }
}

CorpusStats exhaustive_nsp_sweep(int n, bool exact_lengths) {
    CorpusStats stats;
    const auto pairs = pair_order(n);
    const unsigned long codes = 1ul << pairs.size();
    for (unsigned long code = 0; code < codes; ++code) {
        Graph g = graph_from_code(n, pairs, code);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                check_instance(g, u, v,
                               "n" + std::to_string(n) + "-code" + std::to_string(code) + "-" +
                                   std::to_string(u) + "-" + std::to_string(v),
                               exact_lengths, stats);
            }
        }
    }
    return stats;
}

CorpusStats random_gnp_sweep(int instances, uint64_t seed, bool exact_lengths) {
    CorpusStats stats;
    static constexpr std::array<double, 3> kProbs{0.15, 0.3, 0.5};
    for (int i = 0; i < instances; ++i) {
        int n = 7 + i % 8;
        double p = kProbs[(i / 8) % kProbs.size()];
        GraphDocument doc = gen_gnp(n, p, seed + static_cast<uint64_t>(i));
        check_instance(doc.to_graph(), doc.u, doc.v, doc.name, exact_lengths, stats);
    }
    return stats;
}

CorpusStats random_layered_sweep(int instances, uint64_t seed, bool exact_lengths) {
    CorpusStats stats;
    static constexpr std::array<double, 3> kProbs{0.3, 0.5, 0.8};
    for (int i = 0; i < instances; ++i) {
        SplitMix64 shape(seed * 0x100000001b3ull + static_cast<uint64_t>(i));
        int layer_count = 3 + static_cast<int>(shape.below(10));  // 3..12
        std::vector<int> widths(static_cast<size_t>(layer_count), 1);
        for (int l = 1; l + 1 < layer_count; ++l) {
            widths[l] = 1 + static_cast<int>(shape.below(3));
        }
        double p = kProbs[shape.below(kProbs.size())];
        GraphDocument doc = gen_layered(widths, p, seed + 500000 + static_cast<uint64_t>(i));
        check_instance(doc.to_graph(), doc.u, doc.v, doc.name, exact_lengths, stats);
    }
    return stats;
}

void DpSweepStats::merge(const DpSweepStats& other) {
    graphs += other.graphs;
    queries += other.queries;
    oracle_mismatches += other.oracle_mismatches;
    engine_disagreements += other.engine_disagreements;
    note(first_failure, other.first_failure);
}

DpSweepStats dp_oracle_sweep(int n, const std::vector<int>& roots, bool two_target_patterns) {
    DpSweepStats stats;
    const auto pairs = pair_order(n);
    const unsigned long codes = 1ul << pairs.size();

    // target sets: every single pair with wildcard and representative exact
    // lengths, plus fixed two-component patterns
    std::vector<std::vector<ForestTarget>> target_sets;
    for (int s = 0; s < n; ++s) {
        for (int t = s; t < n; ++t) {
            target_sets.push_back({{s, t, std::nullopt}});
            if (s == t) {
                target_sets.push_back({{s, t, 0}});
            } else {
                target_sets.push_back({{s, t, 1}});
                target_sets.push_back({{s, t, 3}});
            }
        }
    }
    if (two_target_patterns) {
        auto add = [&](std::vector<ForestTarget> set) {
            for (const auto& t : set) {
                if (t.s >= n || t.t >= n) return;
            }
            target_sets.push_back(std::move(set));
        };
        add({{0, 1, std::nullopt}, {2, 3, std::nullopt}});
        add({{0, n - 1, std::nullopt}, {1, n - 2, std::nullopt}});
        add({{0, 2, std::nullopt}, {1, 3, std::nullopt}});
        add({{0, 0, 0}, {n - 1, n - 1, 0}});
        add({{0, 3, std::nullopt}, {0, 4, std::nullopt}});  // shared endpoint: never found
        add({{0, 1, 1}, {2, 3, 1}});
    }

    for (unsigned long code = 0; code < codes; ++code) {
        Graph g = graph_from_code(n, pairs, code);
        ++stats.graphs;
        for (int root : roots) {
            if (root >= n) continue;
            Altitude alt = bfs_altitude(g, root);

            // all path forests of g with h-narrow flags, enumerated once
            std::vector<std::pair<PathForest, std::array<bool, 4>>> forests;
            for (unsigned mask = 0; mask < (1u << n); ++mask) {
                std::vector<int> subset;
                for (int x = 0; x < n; ++x) {
                    if (mask & (1u << x)) subset.push_back(x);
                }
                auto forest = path_forest_from_vertices(g, subset);
                if (!forest) continue;
                std::array<bool, 4> narrow{};
                for (int h = 1; h <= 3; ++h) narrow[h] = is_h_narrow(g, alt, *forest, h);
                forests.emplace_back(std::move(*forest), narrow);
            }

            for (int h = 1; h <= 3; ++h) {
                DpOptions plain;
                plain.prune_frozen = false;
                std::vector<ClassTable> tables = dp_tables(g, alt, h, nullptr, plain);
                for (const auto& targets : target_sets) {
                    ++stats.queries;
                    bool oracle_found = false;
                    for (const auto& [forest, narrow] : forests) {
                        if (narrow[h] && forest_matches_targets(forest, targets)) {
                            oracle_found = true;
                            break;
                        }
                    }
                    bool unpruned_found = false;
                    for (const auto& [key, rep] : tables[0].entries) {
                        if (forest_matches_targets(rep, targets)) {
                            unpruned_found = true;
                            break;
                        }
                    }
                    auto pruned = find_path_forest(g, alt, targets, h);
                    std::string where = "n" + std::to_string(n) + "-code" +
                                        std::to_string(code) + "-root" + std::to_string(root) +
                                        "-h" + std::to_string(h);
                    if (pruned.has_value() != unpruned_found) {
                        ++stats.engine_disagreements;
                        note(stats.first_failure, where + ": pruned/unpruned disagree");
                    }
                    if (unpruned_found != oracle_found) {
                        ++stats.oracle_mismatches;
                        note(stats.first_failure, where + ": dp/oracle disagree");
                    }
                }
            }
        }
    }
    return stats;
}

DeterminismStats determinism_sweep() {
    DeterminismStats stats;
    std::vector<GraphDocument> docs;
    for (const auto& fx :
         {fixtures::path4(), fixtures::c5x(), fixtures::c6x(), fixtures::k4(),
          fixtures::theta23(), fixtures::wgadget(), fixtures::zigzag12(), fixtures::widegap25()}) {
        GraphDocument doc;
        doc.name = fx.name;
        doc.n = fx.g.vertex_count();
        doc.edges = fx.g.edges();
        doc.u = fx.u;
        doc.v = fx.v;
        docs.push_back(doc);
    }
    std::vector<std::pair<size_t, uint64_t>> gnp_seeds;  // doc index -> seed
    for (int i = 0; i < 40; ++i) {
        gnp_seeds.emplace_back(docs.size(), 900 + static_cast<uint64_t>(i));
        docs.push_back(gen_gnp(8 + i % 6, 0.3, 900 + static_cast<uint64_t>(i)));
    }
    for (int i = 0; i < 15; ++i) {
        docs.push_back(gen_layered({1, 2, 3, 2, 3, 2, 1}, 0.5, 7000 + static_cast<uint64_t>(i)));
    }

    for (size_t idx = 0; idx < docs.size(); ++idx) {
        const GraphDocument& doc = docs[idx];
        ++stats.cases;
        Graph g = doc.to_graph();
        std::vector<int> dist = distances_from(g, doc.u);

        NspOutcome first = find_nsp(g, doc.u, doc.v);
        NspOutcome second = find_nsp(g, doc.u, doc.v);
        std::string report_a = format_report_nsp(dist[doc.v], first, std::nullopt);
        std::string report_b = format_report_nsp(dist[doc.v], second, std::nullopt);
        bool same = first.certificate == second.certificate && report_a == report_b;

        if (doc.u != doc.v && dist[doc.v] != kUnreachable) {
            same = same && exact_length_path(g, doc.u, doc.v, 1) ==
                               exact_length_path(g, doc.u, doc.v, 1);
            StraightenResult ra = straighten(g, doc.u, doc.v);
            StraightenResult rb = straighten(g, doc.u, doc.v);
            same = same && format_report_straighten(ra, dist[doc.v], std::nullopt) ==
                               format_report_straighten(rb, dist[doc.v], std::nullopt);
        }
        for (const auto& [doc_idx, gnp_seed] : gnp_seeds) {
            if (doc_idx != idx) continue;
            // regenerating from the same seed must be byte-identical
            same = same && serialize(doc, DocFormat::Structured) ==
                               serialize(gen_gnp(doc.n, 0.3, gnp_seed), DocFormat::Structured);
        }
        if (!same) {
            ++stats.mismatches;
            note(stats.first_failure, doc.name + ": outputs differ between runs");
        }
    }
    return stats;
}

BenchStats bench_sweep(int max_vertices, uint64_t seed) {
    BenchStats stats;
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::vector<int>> families;
    for (int layers : {4, 6, 8, 10, 12, 14}) {
        families.push_back(std::vector<int>(static_cast<size_t>(layers), 2));
        families.back().front() = families.back().back() = 1;
    }
    for (int layers : {4, 8, 14}) {
        families.push_back(std::vector<int>(static_cast<size_t>(layers), 3));
        families.back().front() = families.back().back() = 1;
    }
    for (int layers : {5, 9, 13}) {
        std::vector<int> widths(static_cast<size_t>(layers), 2);
        for (size_t i = 1; i + 1 < widths.size(); i += 2) widths[i] = 3;
        widths.front() = widths.back() = 1;
        families.push_back(widths);
    }

    const std::regex line_shape(
        R"(RUN name=\S+ n=\d+ verdict=(yes|no) dist=-?\d+ certlen=(\d+|-) ms=\d+)");
    for (const auto& widths : families) {
        int n = 0;
        for (int w : widths) n += w;
        if (n > max_vertices) continue;
        for (double p : {0.4, 0.7}) {
            for (uint64_t s = 0; s < 3; ++s) {
                GraphDocument doc = gen_layered(widths, p, seed + s);
                Graph g = doc.to_graph();
                auto run0 = std::chrono::steady_clock::now();
                NspOutcome outcome = find_nsp(g, doc.u, doc.v);
                auto run1 = std::chrono::steady_clock::now();
                long ms = std::chrono::duration_cast<std::chrono::milliseconds>(run1 - run0).count();
                std::vector<int> dist = distances_from(g, doc.u);
                std::string line =
                    "RUN name=" + doc.name + " n=" + std::to_string(doc.n) +
                    " verdict=" + (outcome.has_nsp() ? "yes" : "no") +
                    " dist=" + std::to_string(dist[doc.v]) + " certlen=" +
                    (outcome.has_nsp()
                         ? std::to_string(outcome.certificate->size() - 1)
                         : "-") +
                    " ms=" + std::to_string(ms);
                if (!std::regex_match(line, line_shape)) ++stats.malformed;
                if (outcome.has_nsp() && !verify_nsp(g, doc.u, doc.v, *outcome.certificate)) {
                    ++stats.malformed;
                }
                stats.lines += line + "\n";
                ++stats.runs;
            }
        }
    }
    auto t1 = std::chrono::steady_clock::now();
    stats.seconds = std::chrono::duration<double>(t1 - t0).count();
    return stats;
}

}  // namespace nsp
