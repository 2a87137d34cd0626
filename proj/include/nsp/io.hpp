#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsp/graph.hpp"
#include "nsp/layer_dp.hpp"
#include "nsp/solver.hpp"

namespace nsp {

enum class DocFormat { EdgeList, Structured };

// Parsed instance: a graph plus the query endpoints, and (structured format
// only) an optional root and component targets for forest queries.
struct GraphDocument {
    std::string name;
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized a < b, deduplicated
    int u = 0;
    int v = 0;
    std::optional<int> root;
    std::vector<ForestTarget> targets;

    Graph to_graph() const;
    bool operator==(const GraphDocument&) const = default;
};

DocFormat sniff_format(const std::string& text);
GraphDocument parse_graph(const std::string& text, DocFormat format);
std::string serialize(const GraphDocument& doc, DocFormat format);

// SplitMix64 (Steele, Lea, Flood 2014); the fixed generator behind all
// seeded corpora, so documents are bit-reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // true with probability p: next() >> 11 < floor(p * 2^53)
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return (next() >> 11) < static_cast<uint64_t>(p * 9007199254740992.0);
    }

    // uniform value in [0, bound)
    uint64_t below(uint64_t bound) { return next() % bound; }

private:
    uint64_t state_;
};

GraphDocument gen_gnp(int n, double p, uint64_t seed);
GraphDocument gen_layered(const std::vector<int>& widths, double p, uint64_t seed);

// Line-oriented machine-parseable reports. A nullopt `ms` omits the TIME line.
std::string format_report_nsp(int dist, const NspOutcome& outcome, std::optional<long> ms);
std::string format_report_exact(int dist, const std::optional<Path>& path, std::optional<long> ms);
std::string format_report_forest(const std::optional<PathForest>& forest, std::optional<long> ms);
std::string format_report_oracle(int dist, bool has_nsp, const std::vector<int>& lengths,
                                 std::optional<long> ms);
std::string format_report_straighten(const StraightenResult& result, int dist,
                                     std::optional<long> ms);

}  // namespace nsp
