#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

// Per-instance equivalence checks shared by selftest, acceptance, and bench.

struct CorpusStats {
    long instances = 0;
    long verdict_mismatches = 0;
    long cert_failures = 0;
    long exact_length_cases = 0;
    long exact_length_mismatches = 0;
    long straighten_reduced = 0;
    long straighten_found = 0;
    long straighten_failures = 0;
    std::string first_failure;

    bool clean() const {
        return verdict_mismatches == 0 && cert_failures == 0 && exact_length_mismatches == 0 &&
               straighten_failures == 0;
    }
    void merge(const CorpusStats& other);
};

// Runs find_nsp, the oracle, straightening checks, and (optionally) the
// exact-length sweep k = 0..3 on one instance.
void check_instance(const Graph& g, int u, int v, const std::string& label, bool exact_lengths,
                    CorpusStats& stats);

// All 2^C(n,2) labeled graphs on n vertices, all ordered endpoint pairs.
CorpusStats exhaustive_nsp_sweep(int n, bool exact_lengths);

// Seeded corpora; instance grids documented in the README.
CorpusStats random_gnp_sweep(int instances, uint64_t seed, bool exact_lengths);
CorpusStats random_layered_sweep(int instances, uint64_t seed, bool exact_lengths);

struct DpSweepStats {
    long graphs = 0;
    long queries = 0;
    long oracle_mismatches = 0;
    long engine_disagreements = 0;
    std::string first_failure;

    bool clean() const { return oracle_mismatches == 0 && engine_disagreements == 0; }
    void merge(const DpSweepStats& other);
};

// find_path_forest (pruned and unpruned) against the exhaustive oracle over
// BFS altitudes of all graphs on exactly n vertices.
DpSweepStats dp_oracle_sweep(int n, const std::vector<int>& roots, bool two_target_patterns);

struct DeterminismStats {
    long cases = 0;
    long mismatches = 0;
    std::string first_failure;
};

DeterminismStats determinism_sweep();

struct BenchStats {
    long runs = 0;
    long malformed = 0;
    double seconds = 0.0;
    std::string lines;
};

BenchStats bench_sweep(int max_vertices, uint64_t seed);

}  // namespace nsp
