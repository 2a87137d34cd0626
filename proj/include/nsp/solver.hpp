#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

// One straightening contraction: the non-straight component K that was
// deleted, its neighbourhood N(K), the edges added to complete N(K) into a
// clique, and the induced subgraph on K u N(K) as it was before deletion.
struct ContractionRecord {
    std::vector<int> component;                          // K, sorted
    std::vector<int> boundary;                           // N(K), sorted
    std::vector<std::pair<int, int>> added_edges;        // a < b, absent before
    std::vector<std::pair<int, int>> boundary_subgraph;  // edges on K u N(K)
};

// Outcome of straightening: `final_graph` is the contracted graph in its own
// dense id space, with every vertex uv-straight. Records are in original ids.
struct Reduction {
    Graph original;
    int u = 0;
    int v = 0;
    Graph final_graph;
    int final_u = 0;
    int final_v = 0;
    std::vector<int> final_to_original;
    std::vector<int> original_to_final;  // -1 for deleted vertices
    std::vector<ContractionRecord> records;
};

struct NspOutcome {
    std::optional<Path> certificate;

    bool has_nsp() const { return certificate.has_value(); }
};

// True iff p is an induced uv-path of g strictly longer than d(u,v).
bool verify_nsp(const Graph& g, int u, int v, const Path& p);

using StraightenResult = std::variant<Path, Reduction>;

// Either a uv-NSP of g, or a reduction to a graph whose vertices are all
// uv-straight and which has a uv-NSP iff g does.
StraightenResult straighten(const Graph& g, int u, int v);

// Replaces every added edge of the record used by p with a shortest detour
// through the record's deleted component.
Path splice_added_edges(const ContractionRecord& rec, const Path& p);

// Translates an NSP of r.final_graph back to an NSP of r.original.
Path expand_path(const Reduction& r, const Path& p);

// Searches for an NSP whose monotone end segments meet at height gap k.
// Requires every vertex of g to be uv-straight; k in 0..5.
std::optional<Path> bounded_gap_search(const Graph& g, int u, int v, int k);

// The 14-tuple search covering height gaps of six or more. Requires every
// vertex of g to be uv-straight.
std::optional<Path> wide_gap_search(const Graph& g, int u, int v);

// Full decision procedure: straighten, then bounded-gap sweep k = 0..5, then
// the wide-gap search. Any certificate is mapped back to g and verified.
NspOutcome find_nsp(const Graph& g, int u, int v);

}  // namespace nsp
