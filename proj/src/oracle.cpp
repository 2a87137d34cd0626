#include "nsp/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nsp {

namespace {

void extend_paths(const Graph& g, int v, Path& prefix, std::vector<char>& in_path,
                  std::optional<size_t> cap, std::vector<Path>& out) {
    if (cap && out.size() >= *cap) return;
    int last = prefix.back();
    if (last == v) {
        out.push_back(prefix);
        return;  // v cannot reappear, no extension ends at v again
    }
    for (int y : g.neighbors(last)) {
        if (in_path[y]) continue;
        bool chord = false;
        for (size_t i = 0; i + 1 < prefix.size(); ++i) {
            if (g.adjacent(prefix[i], y)) {
                chord = true;
                break;
            }
        }
        if (chord) continue;
        prefix.push_back(y);
        in_path[y] = 1;
        extend_paths(g, v, prefix, in_path, cap, out);
        in_path[y] = 0;
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Path> enumerate_induced_paths(const Graph& g, int u, int v,
                                          std::optional<size_t> cap) {
    std::vector<Path> out;
    if (!g.has_vertex(u) || !g.has_vertex(v)) return out;
    Path prefix{u};
    std::vector<char> in_path(static_cast<size_t>(g.vertex_count()), 0);
    in_path[u] = 1;
    extend_paths(g, v, prefix, in_path, cap, out);
    return out;
}

std::vector<int> induced_length_set(const Graph& g, int u, int v) {
    std::vector<int> lengths;
    for (const Path& p : enumerate_induced_paths(g, u, v)) {
        lengths.push_back(static_cast<int>(p.size()) - 1);
    }
    std::sort(lengths.begin(), lengths.end());
    lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
    return lengths;
}

bool oracle_has_nsp(const Graph& g, int u, int v) {
    std::vector<int> lengths = induced_length_set(g, u, v);
    return !lengths.empty() && lengths.back() > lengths.front();
}

bool oracle_path_forest(const Graph& g, const Altitude& a,
                        const std::vector<ForestTarget>& targets, int h) {
    const int n = g.vertex_count();
    if (n > 16) throw std::invalid_argument("oracle_path_forest: graph too large");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int x = 0; x < n; ++x) {
            if (mask & (1u << x)) subset.push_back(x);
        }
        auto forest = path_forest_from_vertices(g, subset);
        if (!forest) continue;
        if (!is_h_narrow(g, a, *forest, h)) continue;
        if (forest_matches_targets(*forest, targets)) return true;
    }
    return false;
}

}  // namespace nsp
