#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <vector>

#include "nsp/graph.hpp"

namespace nsp {

// Ordered partition of V(G) with no edges between parts whose indices differ
// by two or more. Parts are 0-based and may be empty.
struct Altitude {
    std::vector<std::vector<int>> parts;  // each sorted
    std::vector<int> part_of;             // vertex -> part index

    int part_count() const { return static_cast<int>(parts.size()); }
};

Altitude make_altitude(const Graph& g, const std::vector<std::vector<int>>& parts);

// BFS distance classes from root, plus one trailing part holding any
// unreachable vertices so the altitude always covers V(G).
Altitude bfs_altitude(const Graph& g, int root);

struct ForestComponent {
    int end_a = 0;  // end_a <= end_b
    int end_b = 0;
    std::vector<int> sequence;  // oriented from end_a to end_b

    int length() const { return static_cast<int>(sequence.size()) - 1; }
};

// Induced subgraph whose components are paths, with explicit decomposition.
struct PathForest {
    std::vector<int> vertices;               // sorted
    std::vector<ForestComponent> components;  // sorted by (end_a, end_b, length)

    bool empty() const { return vertices.empty(); }
    int component_count() const { return static_cast<int>(components.size()); }
};

// Unique decomposition of g[s] if it is a path forest, nullopt otherwise.
std::optional<PathForest> path_forest_from_vertices(const Graph& g, const std::vector<int>& s);

bool is_h_restricted(const PathForest& f, const std::vector<int>& x, int h);
bool is_h_narrow(const Graph& g, const Altitude& a, const PathForest& f, int h);

// Key of the X-equivalence class: intersection with X, component count, and
// the (min end, max end, length) profile.
struct ClassKey {
    std::vector<int> x_intersection;
    int component_count = 0;
    std::vector<std::array<int, 3>> profile;

    auto operator<=>(const ClassKey&) const = default;
};

ClassKey class_key(const PathForest& f, const std::vector<int>& x);

// One representative forest per class, all h-narrow in the suffix graph.
struct ClassTable {
    int index = 0;
    std::map<ClassKey, PathForest> entries;
};

// Component query: ends s and t, and either an exact length or a wildcard.
struct ForestTarget {
    int s = 0;
    int t = 0;
    std::optional<int> length;  // nullopt = wildcard

    bool operator==(const ForestTarget&) const = default;
};

struct DpOptions {
    bool prune_frozen = true;
};

ClassTable init_top_classes(const Graph& g, const Altitude& a, int h);

// Computes the table for part `index` from the one for `index + 1`, keeping
// every candidate that is a path forest with at most h components lacking an
// end in the current part. With pruning enabled, classes carrying a frozen
// component (no end in the current part) that matches no target are dropped.
ClassTable dp_step(const Graph& g, const Altitude& a, int index, const ClassTable& next_table,
                   int h, const std::vector<ForestTarget>* targets = nullptr,
                   const DpOptions& opts = {});

// All tables from the last part down to part 0; tables[i] is for part i.
std::vector<ClassTable> dp_tables(const Graph& g, const Altitude& a, int h,
                                  const std::vector<ForestTarget>* targets = nullptr,
                                  const DpOptions& opts = {});

// An h-narrow path forest whose components match the targets exactly, or
// nullopt. Limits: h in 1..6, at most 4 targets.
std::optional<PathForest> find_path_forest(const Graph& g, const Altitude& a,
                                           const std::vector<ForestTarget>& targets, int h,
                                           const DpOptions& opts = {});

// True iff the components of f can be matched one-to-one against targets.
bool forest_matches_targets(const PathForest& f, const std::vector<ForestTarget>& targets);

// Induced uv-path of length exactly d(u,v) + k, or nullopt. k in 0..5.
std::optional<Path> exact_length_path(const Graph& g, int u, int v, int k,
                                      const DpOptions& opts = {});

// Path forest with one component per pair, bounded by h vertices per BFS
// level from root; lengths are free.
std::optional<PathForest> disjoint_short_paths(const Graph& g, int root,
                                               const std::vector<std::pair<int, int>>& pairs,
                                               int h, const DpOptions& opts = {});

}  // namespace nsp
