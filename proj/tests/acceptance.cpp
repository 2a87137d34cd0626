// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtimes are wall-clock on a single core.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "nsp/corpus.hpp"

namespace {

struct Criterion {
    std::string name{};
    bool passed{false};
    std::string detail{};
    double seconds{0.0};
};

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

}  // namespace

int main() {
    using nsp::CorpusStats;
    std::vector<Criterion> results;

    // 1. exhaustive correctness on six vertices, plus straightening checks
    Stopwatch t1;
    CorpusStats six = nsp::exhaustive_nsp_sweep(6, false);
    {
        Criterion c{"exhaustive-6-vertex"};
        c.seconds = t1.seconds();
        c.passed = six.verdict_mismatches == 0 && six.cert_failures == 0 && c.seconds < 1800.0;
        c.detail = "instances=" + std::to_string(six.instances) +
                   " verdict_mismatches=" + std::to_string(six.verdict_mismatches) +
                   " cert_failures=" + std::to_string(six.cert_failures);
        if (!six.first_failure.empty()) c.detail += " first=" + six.first_failure;
        results.push_back(c);
    }

    // 2. randomized correctness: 10k+ G(n,p) and 2k layered instances
    Stopwatch t2;
    CorpusStats gnp = nsp::random_gnp_sweep(10008, 20250810, true);
    CorpusStats layered = nsp::random_layered_sweep(2000, 424242, true);
    {
        Criterion c{"randomized-correctness"};
        c.seconds = t2.seconds();
        c.passed = gnp.verdict_mismatches == 0 && gnp.cert_failures == 0 &&
                   layered.verdict_mismatches == 0 && layered.cert_failures == 0;
        c.detail = "gnp_instances=" + std::to_string(gnp.instances) +
                   " layered_instances=" + std::to_string(layered.instances) +
                   " verdict_mismatches=" +
                   std::to_string(gnp.verdict_mismatches + layered.verdict_mismatches) +
                   " cert_failures=" + std::to_string(gnp.cert_failures + layered.cert_failures);
        std::string first = !gnp.first_failure.empty() ? gnp.first_failure : layered.first_failure;
        if (!first.empty()) c.detail += " first=" + first;
        results.push_back(c);
    }

    // 3. exact-length queries agree with the oracle length sets (k = 0..3)
    {
        Criterion c{"exact-length"};
        c.seconds = 0.0;  // measured inside criterion 2's sweeps
        long cases = gnp.exact_length_cases + layered.exact_length_cases;
        long bad = gnp.exact_length_mismatches + layered.exact_length_mismatches;
        c.passed = cases > 0 && bad == 0;
        c.detail = "cases=" + std::to_string(cases) + " mismatches=" + std::to_string(bad);
        results.push_back(c);
    }

    // 4. dp engine vs exhaustive forest oracle, pruned and unpruned
    Stopwatch t4;
    nsp::DpSweepStats dp;
    for (int n = 1; n <= 5; ++n) {
        std::vector<int> roots;
        for (int r = 0; r < n; ++r) roots.push_back(r);
        dp.merge(nsp::dp_oracle_sweep(n, roots, true));
    }
    dp.merge(nsp::dp_oracle_sweep(6, {0}, true));
    {
        Criterion c{"dp-engine"};
        c.seconds = t4.seconds();
        c.passed = dp.clean();
        c.detail = "graphs=" + std::to_string(dp.graphs) +
                   " queries=" + std::to_string(dp.queries) +
                   " oracle_mismatches=" + std::to_string(dp.oracle_mismatches) +
                   " engine_disagreements=" + std::to_string(dp.engine_disagreements);
        if (!dp.first_failure.empty()) c.detail += " first=" + dp.first_failure;
        results.push_back(c);
    }

    // 5. straightening invariants across both corpora
    {
        Criterion c{"straightening"};
        c.seconds = 0.0;  // measured inside criteria 1 and 2
        long reduced = six.straighten_reduced + gnp.straighten_reduced + layered.straighten_reduced;
        long found = six.straighten_found + gnp.straighten_found + layered.straighten_found;
        long bad =
            six.straighten_failures + gnp.straighten_failures + layered.straighten_failures;
        c.passed = bad == 0 && reduced > 0 && found > 0;
        c.detail = "reduced=" + std::to_string(reduced) + " found=" + std::to_string(found) +
                   " failures=" + std::to_string(bad);
        results.push_back(c);
    }

    // 6. byte-identical reports across repeated runs
    Stopwatch t6;
    nsp::DeterminismStats det = nsp::determinism_sweep();
    {
        Criterion c{"determinism"};
        c.seconds = t6.seconds();
        c.passed = det.cases > 0 && det.mismatches == 0;
        c.detail = "cases=" + std::to_string(det.cases) +
                   " mismatches=" + std::to_string(det.mismatches);
        if (!det.first_failure.empty()) c.detail += " first=" + det.first_failure;
        results.push_back(c);
    }

    // 7. bench smoke: layered families up to 40 vertices inside ten minutes
    Stopwatch t7;
    nsp::BenchStats bench = nsp::bench_sweep(40, 1);
    {
        Criterion c{"bench-smoke"};
        c.seconds = t7.seconds();
        c.passed = bench.runs > 0 && bench.malformed == 0 && bench.seconds < 600.0;
        c.detail = "runs=" + std::to_string(bench.runs) +
                   " malformed=" + std::to_string(bench.malformed);
        results.push_back(c);
    }

    int failed = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        if (!c.passed) ++failed;
        std::printf("[%zu/%zu] %-22s %s (%s, %.1fs)\n", i + 1, results.size(), c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.detail.c_str(), c.seconds);
    }
    std::printf("ACCEPTANCE: %zu/%zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}
