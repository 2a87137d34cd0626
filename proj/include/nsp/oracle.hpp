#pragma once

#include <optional>
#include <vector>

#include "nsp/graph.hpp"
#include "nsp/layer_dp.hpp"

namespace nsp {

// Exponential-time reference implementations. Intentionally naive; used as
// ground truth by the test and selftest suites.

// All induced uv-paths, in the deterministic order given by ascending-id
// depth-first extension. Stops early once `cap` paths were collected.
std::vector<Path> enumerate_induced_paths(const Graph& g, int u, int v,
                                          std::optional<size_t> cap = std::nullopt);

// Sorted set of lengths of induced uv-paths; empty when v is unreachable.
std::vector<int> induced_length_set(const Graph& g, int u, int v);

bool oracle_has_nsp(const Graph& g, int u, int v);

// Exhaustive subset search for an h-narrow path forest matching `targets`.
// Guarded to |V(G)| <= 16.
bool oracle_path_forest(const Graph& g, const Altitude& a,
                        const std::vector<ForestTarget>& targets, int h);

}  // namespace nsp
