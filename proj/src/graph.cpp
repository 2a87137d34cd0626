#include "nsp/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nsp {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0) {
        throw std::invalid_argument("graph: negative vertex count");
    }
    adj_.assign(static_cast<size_t>(vertex_count), {});
    for (const auto& [a, b] : edges) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count) {
            throw std::invalid_argument("graph: edge (" + std::to_string(a) + "," +
                                        std::to_string(b) + ") out of range");
        }
        if (a == b) {
            throw std::invalid_argument("graph: self-loop (" + std::to_string(a) + "," +
                                        std::to_string(b) + ")");
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        edge_count_ += static_cast<int>(list.size());
    }
    edge_count_ /= 2;
}

bool Graph::adjacent(int a, int b) const {
    const auto& list = adj_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int a = 0; a < vertex_count(); ++a) {
        for (int b : adj_[a]) {
            if (a < b) out.emplace_back(a, b);
        }
    }
    return out;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return Graph(vertex_count, edges);
}

std::vector<int> distances_from(const Graph& g, int s) {
    if (!g.has_vertex(s)) throw std::invalid_argument("distances_from: bad source");
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), kUnreachable);
    std::deque<int> queue{s};
    dist[s] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : g.neighbors(x)) {
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

std::vector<int> straight_set(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw std::invalid_argument("straight_set: vertex out of range");
    }
    std::vector<int> du = distances_from(g, u);
    if (du[v] == kUnreachable) throw std::invalid_argument("straight_set: no uv-path");
    std::vector<int> dv = distances_from(g, v);
    std::vector<int> out;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] == du[v]) {
            out.push_back(x);
        }
    }
    return out;
}

Layering layering(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("layering: u and v must differ");
    std::vector<int> du = distances_from(g, u);
    if (!g.has_vertex(v) || du[v] == kUnreachable) {
        throw std::invalid_argument("layering: v unreachable from u");
    }
    Layering l;
    l.u = u;
    l.v = v;
    l.dist = du[v];
    l.layers.assign(static_cast<size_t>(l.dist) + 1, {});
    l.height.assign(static_cast<size_t>(g.vertex_count()), kUnreachable);
    for (int x : straight_set(g, u, v)) {
        l.height[x] = du[x];
        l.layers[du[x]].push_back(x);
    }
    return l;
}

bool is_induced_path(const Graph& g, const Path& seq) {
    if (seq.empty()) return false;
    for (int x : seq) {
        if (!g.has_vertex(x)) return false;
    }
    const int len = static_cast<int>(seq.size());
    for (int i = 0; i < len; ++i) {
        for (int j = i + 1; j < len; ++j) {
            if (seq[i] == seq[j]) return false;
            bool adj = g.adjacent(seq[i], seq[j]);
            if (j == i + 1 ? !adj : adj) return false;
        }
    }
    return true;
}

Path monotone_path(const Graph& g, const Layering& l, int x, Direction dir) {
    if (!g.has_vertex(x) || !l.is_straight(x)) {
        throw std::invalid_argument("monotone_path: x is not straight");
    }
    const int step = dir == Direction::TowardU ? -1 : +1;
    const int stop = dir == Direction::TowardU ? 0 : l.dist;
    Path path{x};
    int cur = x;
    while (l.height[cur] != stop) {
        int want = l.height[cur] + step;
        int next = kUnreachable;
        for (int y : g.neighbors(cur)) {
            if (l.is_straight(y) && l.height[y] == want) {
                next = y;  // neighbours are sorted, first hit is smallest
                break;
            }
        }
        if (next == kUnreachable) {
            throw std::logic_error("monotone_path: layering misses a step");
        }
        path.push_back(next);
        cur = next;
    }
    return path;
}

bool is_monotone(const Layering& l, const Path& p) {
    std::vector<char> used(static_cast<size_t>(l.dist) + 1, 0);
    for (int x : p) {
        if (x < 0 || x >= static_cast<int>(l.height.size()) || !l.is_straight(x)) return false;
        if (used[l.height[x]]) return false;
        used[l.height[x]] = 1;
    }
    return true;
}

}  // namespace nsp
