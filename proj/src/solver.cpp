#include "nsp/solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>

#include "nsp/layer_dp.hpp"

namespace nsp {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// Shortest path between a and b inside `allowed`, by ascending-id BFS.
std::optional<Path> shortest_path_within(const std::vector<std::vector<int>>& adj, int a, int b,
                                         const std::vector<char>& allowed) {
    std::vector<int> parent(adj.size(), -2);
    std::deque<int> queue{a};
    parent[a] = -1;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        if (x == b) break;
        for (int y : adj[x]) {
            if (allowed[y] && parent[y] == -2) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if (parent[b] == -2) return std::nullopt;
    Path path;
    for (int x = b; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

std::vector<std::vector<int>> adjacency_copy(const Graph& g) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(g.vertex_count()));
    for (int x = 0; x < g.vertex_count(); ++x) adj[x] = g.neighbors(x);
    return adj;
}

Graph graph_from_adjacency(const std::vector<std::vector<int>>& adj) {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < static_cast<int>(adj.size()); ++x) {
        for (int y : adj[x]) {
            if (x < y) edges.emplace_back(x, y);
        }
    }
    return Graph(static_cast<int>(adj.size()), edges);
}

Path expand_through_records(const std::vector<ContractionRecord>& records, Path p) {
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        p = splice_added_edges(*it, p);
    }
    return p;
}

// Ascending chains of `count` vertices starting at height `base`, one vertex
// per height, consecutive vertices adjacent. Lexicographic order.
std::vector<std::vector<int>> ascending_chains(const Graph& g, const Layering& l, int base,
                                               int count) {
    std::vector<std::vector<int>> out;
    if (base + count - 1 > l.dist) return out;
    std::vector<int> cur;
    auto extend = [&](auto&& self, int height) -> void {
        if (static_cast<int>(cur.size()) == count) {
            out.push_back(cur);
            return;
        }
        if (cur.empty()) {
            for (int x : l.layers[height]) {
                cur.push_back(x);
                self(self, height + 1);
                cur.pop_back();
            }
            return;
        }
        for (int y : g.neighbors(cur.back())) {
            if (l.is_straight(y) && l.height[y] == height) {
                cur.push_back(y);
                self(self, height + 1);
                cur.pop_back();
            }
        }
    };
    extend(extend, base);
    return out;
}

bool anticomplete(const Graph& g, const std::vector<int>& xs, const std::vector<int>& ys) {
    for (int x : xs) {
        for (int y : ys) {
            if (g.adjacent(x, y)) return false;
        }
    }
    return true;
}

void require_all_straight(const Layering& l, const char* who) {
    for (int h : l.height) {
        if (h == kUnreachable) {
            throw std::invalid_argument(std::string(who) + ": all vertices must be uv-straight");
        }
    }
}

// Deletes the closed neighbourhoods of `sources` except the vertices in
// `keep`; returns the survivor mask.
std::vector<char> survivors_after_deletion(const Graph& g, const std::vector<int>& sources,
                                           const std::vector<int>& keep) {
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
    for (int z : sources) {
        alive[z] = 0;
        for (int y : g.neighbors(z)) alive[y] = 0;
    }
    for (int z : keep) alive[z] = 1;
    return alive;
}

}  // namespace

bool verify_nsp(const Graph& g, int u, int v, const Path& p) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) return false;
    if (p.empty() || p.front() != u || p.back() != v) return false;
    if (!is_induced_path(g, p)) return false;
    std::vector<int> dist = distances_from(g, u);
    if (dist[v] == kUnreachable) return false;
    return static_cast<int>(p.size()) - 1 > dist[v];
}

StraightenResult straighten(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw std::invalid_argument("straighten: vertex out of range");
    }
    if (u == v) throw std::invalid_argument("straighten: u and v must differ");
    {
        std::vector<int> dist = distances_from(g, u);
        if (dist[v] == kUnreachable) {
            throw std::invalid_argument("straighten: v unreachable from u");
        }
    }

    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj = adjacency_copy(g);
    std::vector<char> alive(static_cast<size_t>(n), 1);
    std::vector<ContractionRecord> records;
    std::vector<char> prev_straight;

    while (true) {
        Graph cur = graph_from_adjacency(adj);
        std::vector<int> du = distances_from(cur, u);
        std::vector<int> dv = distances_from(cur, v);
        if (du[v] == kUnreachable) throw std::logic_error("straighten: lost u-v connectivity");
        const int total = du[v];

        std::vector<char> straight(static_cast<size_t>(n), 0);
        for (int x = 0; x < n; ++x) {
            straight[x] = (alive[x] && du[x] != kUnreachable && dv[x] != kUnreachable &&
                           du[x] + dv[x] == total)
                              ? 1
                              : 0;
        }
        if (!prev_straight.empty()) {
            // layering stability: contraction must not disturb straightness
            for (int x = 0; x < n; ++x) {
                if (alive[x] && straight[x] != prev_straight[x]) {
                    throw std::logic_error("straighten: straight set drifted after contraction");
                }
            }
        }

        int seed = -1;
        for (int x = 0; x < n; ++x) {
            if (alive[x] && !straight[x]) {
                seed = x;
                break;
            }
        }
        if (seed == -1) {
            Reduction red;
            red.original = g;
            red.u = u;
            red.v = v;
            red.original_to_final.assign(static_cast<size_t>(n), -1);
            for (int x = 0; x < n; ++x) {
                if (alive[x]) {
                    red.original_to_final[x] = static_cast<int>(red.final_to_original.size());
                    red.final_to_original.push_back(x);
                }
            }
            std::vector<std::pair<int, int>> edges;
            for (int x = 0; x < n; ++x) {
                for (int y : adj[x]) {
                    if (x < y) edges.emplace_back(red.original_to_final[x], red.original_to_final[y]);
                }
            }
            red.final_graph = Graph(static_cast<int>(red.final_to_original.size()), edges);
            red.final_u = red.original_to_final[u];
            red.final_v = red.original_to_final[v];
            red.records = std::move(records);
            return red;
        }

        // component K of the non-straight subgraph containing the seed
        std::vector<int> component{seed};
        std::vector<char> in_k(static_cast<size_t>(n), 0);
        in_k[seed] = 1;
        for (size_t head = 0; head < component.size(); ++head) {
            for (int y : adj[component[head]]) {
                if (alive[y] && !straight[y] && !in_k[y]) {
                    in_k[y] = 1;
                    component.push_back(y);
                }
            }
        }
        std::sort(component.begin(), component.end());

        std::vector<int> boundary;
        for (int x : component) {
            for (int y : adj[x]) {
                if (!in_k[y]) boundary.push_back(y);
            }
        }
        std::sort(boundary.begin(), boundary.end());
        boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());

        // widest non-adjacent height gap on the boundary, smallest ids first
        int best_x = -1;
        int best_y = -1;
        for (int x : boundary) {
            for (int y : boundary) {
                if (du[x] >= du[y] || cur.adjacent(x, y)) continue;
                if (best_x == -1 || du[y] - du[x] > du[best_y] - du[best_x]) {
                    best_x = x;
                    best_y = y;
                }
            }
        }

        if (best_x != -1) {
            Layering layers = layering(cur, u, v);
            Path to_u = monotone_path(cur, layers, best_x, Direction::TowardU);
            Path to_v = monotone_path(cur, layers, best_y, Direction::TowardV);
            std::vector<char> allowed(static_cast<size_t>(n), 0);
            for (int x : component) allowed[x] = 1;
            allowed[best_x] = allowed[best_y] = 1;
            auto through = shortest_path_within(adj, best_x, best_y, allowed);
            if (!through) throw std::logic_error("straighten: boundary pair not joined through K");

            Path cert(to_u.rbegin(), to_u.rend());
            cert.insert(cert.end(), through->begin() + 1, through->end());
            cert.insert(cert.end(), to_v.begin() + 1, to_v.end());
            if (!verify_nsp(cur, u, v, cert)) {
                throw std::logic_error("straighten: assembled certificate failed verification");
            }
            cert = expand_through_records(records, cert);
            if (!verify_nsp(g, u, v, cert)) {
                throw std::logic_error("straighten: expanded certificate failed verification");
            }
            return cert;
        }

        // contract: record, delete K, complete N(K) into a clique
        ContractionRecord rec;
        rec.component = component;
        rec.boundary = boundary;
        std::vector<int> closed = component;
        closed.insert(closed.end(), boundary.begin(), boundary.end());
        std::sort(closed.begin(), closed.end());
        for (int x : closed) {
            for (int y : adj[x]) {
                if (x < y && contains(closed, y)) rec.boundary_subgraph.emplace_back(x, y);
            }
        }
        for (size_t i = 0; i < boundary.size(); ++i) {
            for (size_t j = i + 1; j < boundary.size(); ++j) {
                if (!cur.adjacent(boundary[i], boundary[j])) {
                    rec.added_edges.emplace_back(boundary[i], boundary[j]);
                }
            }
        }

        for (int x : component) {
            for (int y : adj[x]) {
                if (!in_k[y]) {
                    auto& list = adj[y];
                    list.erase(std::remove(list.begin(), list.end(), x), list.end());
                }
            }
            adj[x].clear();
            alive[x] = 0;
        }
        for (const auto& [a, b] : rec.added_edges) {
            adj[a].insert(std::upper_bound(adj[a].begin(), adj[a].end(), b), b);
            adj[b].insert(std::upper_bound(adj[b].begin(), adj[b].end(), a), a);
        }
        records.push_back(std::move(rec));

        prev_straight = straight;
        for (int x : component) prev_straight[x] = 0;
    }
}

Path splice_added_edges(const ContractionRecord& rec, const Path& p) {
    if (p.empty()) return p;
    std::map<int, std::vector<int>> adj;
    for (const auto& [a, b] : rec.boundary_subgraph) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& [x, list] : adj) std::sort(list.begin(), list.end());

    Path out{p.front()};
    for (size_t i = 0; i + 1 < p.size(); ++i) {
        const int a = p[i];
        const int b = p[i + 1];
        std::pair<int, int> key{std::min(a, b), std::max(a, b)};
        if (!std::binary_search(rec.added_edges.begin(), rec.added_edges.end(), key)) {
            out.push_back(b);
            continue;
        }
        // walk a..b through K, shortest detour first
        std::map<int, int> parent;
        std::deque<int> queue{a};
        parent[a] = -1;
        while (!queue.empty() && !parent.count(b)) {
            int x = queue.front();
            queue.pop_front();
            auto it = adj.find(x);
            if (it == adj.end()) continue;
            for (int y : it->second) {
                if (parent.count(y)) continue;
                if (y != b && !contains(rec.component, y)) continue;
                parent[y] = x;
                queue.push_back(y);
            }
        }
        if (!parent.count(b)) throw std::logic_error("splice_added_edges: no detour through K");
        Path detour;
        for (int x = b; x != -1; x = parent[x]) detour.push_back(x);
        std::reverse(detour.begin(), detour.end());
        out.insert(out.end(), detour.begin() + 1, detour.end());
    }
    return out;
}

Path expand_path(const Reduction& r, const Path& p) {
    if (!verify_nsp(r.final_graph, r.final_u, r.final_v, p)) {
        throw std::invalid_argument("expand_path: input is not an NSP of the reduced graph");
    }
    Path mapped;
    mapped.reserve(p.size());
    for (int x : p) mapped.push_back(r.final_to_original[x]);
    Path out = expand_through_records(r.records, mapped);
    if (!verify_nsp(r.original, r.u, r.v, out)) {
        throw std::logic_error("expand_path: expansion failed verification");
    }
    return out;
}

std::optional<Path> bounded_gap_search(const Graph& g, int u, int v, int k) {
    if (k < 0 || k > 5) throw std::invalid_argument("bounded_gap_search: k must be in 0..5");
    Layering layers = layering(g, u, v);
    require_all_straight(layers, "bounded_gap_search");
    const auto& h = layers.height;
    const int chain_len = k + 2;
    const std::vector<std::vector<int>> adj = adjacency_copy(g);

    for (int x = 0; x < g.vertex_count(); ++x) {
        for (int y : g.neighbors(x)) {
            if (h[y] != h[x] + 1 || h[y] + k + 1 > layers.dist) continue;
            Path qu = monotone_path(g, layers, x, Direction::TowardU);

            std::vector<int> chain;
            std::optional<Path> found;
            auto grow = [&](auto&& self) -> void {
                if (found) return;
                if (static_cast<int>(chain.size()) == chain_len) {
                    Path qv = monotone_path(g, layers, chain.back(), Direction::TowardV);
                    std::vector<int> sources = qu;
                    sources.insert(sources.end(), qv.begin(), qv.end());
                    sources.insert(sources.end(), chain.begin() + 1, chain.end());
                    std::vector<char> allowed =
                        survivors_after_deletion(g, sources, {y, chain.front()});
                    auto mid = shortest_path_within(adj, chain.front(), y, allowed);
                    if (!mid) return;
                    Path cert(qu.rbegin(), qu.rend());
                    cert.push_back(y);
                    cert.insert(cert.end(), mid->rbegin() + 1, mid->rend());
                    cert.insert(cert.end(), chain.begin() + 1, chain.end());
                    cert.insert(cert.end(), qv.begin() + 1, qv.end());
                    if (verify_nsp(g, u, v, cert)) found = cert;
                    return;
                }
                int want = h[y] + static_cast<int>(chain.size());
                const std::vector<int>& pool =
                    chain.empty() ? layers.layers[want] : g.neighbors(chain.back());
                for (int w : pool) {
                    if (h[w] != want || w == y || g.adjacent(w, x)) continue;
                    if (!chain.empty() && g.adjacent(w, y)) continue;
                    chain.push_back(w);
                    self(self);
                    chain.pop_back();
                    if (found) return;
                }
            };
            grow(grow);
            if (found) return found;
        }
    }
    return std::nullopt;
}

std::optional<Path> wide_gap_search(const Graph& g, int u, int v) {
    Layering layers = layering(g, u, v);
    const int d = layers.dist;
    if (d < 7) return std::nullopt;  // no 14-tuple fits below seven layers
    require_all_straight(layers, "wide_gap_search");
    Altitude alt = bfs_altitude(g, u);
    std::vector<std::vector<int>> adj = adjacency_copy(g);

    // monotone forest queries are shared across tuples
    std::map<std::tuple<int, int, int, int>, std::optional<PathForest>> query_cache;
    auto monotone_pair = [&](int s3, int s4, int t3, int t4,
                             int len) -> const std::optional<PathForest>& {
        auto key = std::make_tuple(s3, s4, t3, t4);
        auto it = query_cache.find(key);
        if (it != query_cache.end()) return it->second;
        std::vector<ForestTarget> targets{{s3, s4, len}, {t3, t4, len}};
        return query_cache.emplace(key, find_path_forest(g, alt, targets, 2)).first->second;
    };

    for (int a = 0; a + 7 <= d; ++a) {
        std::vector<std::vector<int>> s_low = ascending_chains(g, layers, a, 4);
        std::vector<std::vector<int>> t_low = ascending_chains(g, layers, a + 1, 3);
        std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> low_pairs;
        for (const auto& s : s_low) {
            for (const auto& t : t_low) {
                if (s[1] == t[0] || s[2] == t[1] || s[3] == t[2]) continue;
                if (!anticomplete(g, s, t)) continue;
                low_pairs.emplace_back(&s, &t);
            }
        }
        if (low_pairs.empty()) continue;

        for (int b = a + 4; b + 3 <= d; ++b) {
            const int len = b - a - 3;
            std::vector<std::vector<int>> s_high = ascending_chains(g, layers, b, 3);
            std::vector<std::vector<int>> t_high = ascending_chains(g, layers, b, 4);
            std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> high_pairs;
            for (const auto& s : s_high) {
                for (const auto& t : t_high) {
                    if (s[0] == t[0] || s[1] == t[1] || s[2] == t[2]) continue;
                    if (!anticomplete(g, s, t)) continue;
                    high_pairs.emplace_back(&s, &t);
                }
            }
            for (const auto& [sl, tl] : low_pairs) {
                for (const auto& [sh, th] : high_pairs) {
                    if (!anticomplete(g, *sl, *th) || !anticomplete(g, *sh, *tl)) continue;
                    const auto& forest = monotone_pair((*sl)[3], (*sh)[0], (*tl)[2], (*th)[0], len);
                    if (!forest) continue;

                    Path r_u;
                    Path r_v;
                    for (const auto& comp : forest->components) {
                        Path seq = comp.sequence;
                        if (comp.end_a == (*sl)[3] || comp.end_b == (*sl)[3]) {
                            if (seq.front() != (*sl)[3]) std::reverse(seq.begin(), seq.end());
                            r_u = seq;
                        } else {
                            if (seq.front() != (*tl)[2]) std::reverse(seq.begin(), seq.end());
                            r_v = seq;
                        }
                    }

                    Path qu = monotone_path(g, layers, (*sl)[0], Direction::TowardU);
                    Path pu(qu.rbegin(), qu.rend());  // u .. s0
                    pu.insert(pu.end(), sl->begin() + 1, sl->end() - 1);
                    pu.insert(pu.end(), r_u.begin(), r_u.end());
                    pu.insert(pu.end(), sh->begin() + 1, sh->end());

                    Path pv(tl->begin(), tl->end() - 1);
                    pv.insert(pv.end(), r_v.begin(), r_v.end());
                    pv.insert(pv.end(), th->begin() + 1, th->end());
                    Path qv = monotone_path(g, layers, (*th)[3], Direction::TowardV);
                    pv.insert(pv.end(), qv.begin() + 1, qv.end());

                    if (!is_induced_path(g, pu) || !is_induced_path(g, pv)) continue;

                    const int s6 = (*sh)[2];
                    const int t1 = (*tl)[0];
                    std::vector<int> sources;
                    for (int z : pu) {
                        if (z != s6) sources.push_back(z);
                    }
                    for (int z : pv) {
                        if (z != t1) sources.push_back(z);
                    }
                    std::vector<char> allowed = survivors_after_deletion(g, sources, {s6, t1});
                    auto mid = shortest_path_within(adj, t1, s6, allowed);
                    if (!mid) continue;

                    Path cert = pu;  // u .. s6
                    cert.insert(cert.end(), mid->rbegin() + 1, mid->rend());
                    cert.insert(cert.end(), pv.begin() + 1, pv.end());
                    if (verify_nsp(g, u, v, cert)) return cert;
                }
            }
        }
    }
    return std::nullopt;
}

NspOutcome find_nsp(const Graph& g, int u, int v) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw std::invalid_argument("find_nsp: vertex out of range");
    }
    if (u == v) return {};
    {
        std::vector<int> dist = distances_from(g, u);
        if (dist[v] == kUnreachable) return {};
    }
    StraightenResult result = straighten(g, u, v);
    if (auto* path = std::get_if<Path>(&result)) return {*path};

    const Reduction& red = std::get<Reduction>(result);
    for (int k = 0; k <= 5; ++k) {
        if (auto p = bounded_gap_search(red.final_graph, red.final_u, red.final_v, k)) {
            return {expand_path(red, *p)};
        }
    }
    if (auto p = wide_gap_search(red.final_graph, red.final_u, red.final_v)) {
        return {expand_path(red, *p)};
    }
    return {};
}

}  // namespace nsp
