#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nsp {

// Vertex ids are dense integers 0..n-1.
using Path = std::vector<int>;

constexpr int kUnreachable = -1;

// Simple undirected graph over dense vertex ids, adjacency kept sorted.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int x) const { return adj_[x]; }
    bool adjacent(int a, int b) const;
    bool has_vertex(int x) const { return x >= 0 && x < vertex_count(); }
    int degree(int x) const { return static_cast<int>(adj_[x].size()); }

    std::vector<std::pair<int, int>> edges() const;

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// BFS distances from s; unreachable vertices get kUnreachable.
std::vector<int> distances_from(const Graph& g, int s);

// F = { x : d(u,x) + d(x,v) = d(u,v) }. Throws if v is unreachable from u.
std::vector<int> straight_set(const Graph& g, int u, int v);

// Layers of straight vertices indexed by distance from u.
struct Layering {
    int u = 0;
    int v = 0;
    int dist = 0;
    std::vector<std::vector<int>> layers;  // layers[i] sorted, layers[0] = {u}
    std::vector<int> height;               // kUnreachable on non-straight vertices

    bool is_straight(int x) const { return height[x] != kUnreachable; }
};

Layering layering(const Graph& g, int u, int v);

// True iff seq is a chordless path of g (vertices distinct, consecutive pairs
// adjacent, nothing else adjacent). Empty sequences are not paths.
bool is_induced_path(const Graph& g, const Path& seq);

enum class Direction { TowardU, TowardV };

// Walks from x one layer at a time, always to the smallest-id neighbour in the
// next layer, ending at u (resp. v). x must be straight.
Path monotone_path(const Graph& g, const Layering& l, int x, Direction dir);

// True iff all vertices of p are straight and no two share a height.
bool is_monotone(const Layering& l, const Path& p);

}  // namespace nsp
