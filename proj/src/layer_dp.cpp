#include "nsp/layer_dp.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace nsp {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

bool component_matches(const ForestComponent& c, const ForestTarget& t) {
    int lo = std::min(t.s, t.t);
    int hi = std::max(t.s, t.t);
    if (c.end_a != lo || c.end_b != hi) return false;
    return !t.length || *t.length == c.length();
}

// Subsets of `pool` with at most h elements, in lexicographic order.
template <typename Fn>
void for_each_subset(const std::vector<int>& pool, int h, Fn&& fn) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t start) {
        fn(cur);
        if (static_cast<int>(cur.size()) == h) return;
        for (size_t j = start; j < pool.size(); ++j) {
            cur.push_back(pool[j]);
            rec(j + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

void verify_forest_result(const Graph& g, const Altitude& a, const PathForest& f,
                          const std::vector<ForestTarget>& targets, int h) {
    auto recomputed = path_forest_from_vertices(g, f.vertices);
    if (!recomputed) throw std::logic_error("find_path_forest: result is not a path forest");
    if (recomputed->components.size() != f.components.size()) {
        throw std::logic_error("find_path_forest: stale decomposition");
    }
    for (size_t i = 0; i < f.components.size(); ++i) {
        const auto& lhs = f.components[i];
        const auto& rhs = recomputed->components[i];
        if (lhs.end_a != rhs.end_a || lhs.end_b != rhs.end_b || lhs.length() != rhs.length()) {
            throw std::logic_error("find_path_forest: stale decomposition");
        }
    }
    if (!is_h_narrow(g, a, f, h)) throw std::logic_error("find_path_forest: result not h-narrow");
    if (!forest_matches_targets(f, targets)) {
        throw std::logic_error("find_path_forest: result does not match targets");
    }
}

}  // namespace

Altitude make_altitude(const Graph& g, const std::vector<std::vector<int>>& parts) {
    Altitude a;
    a.part_of.assign(static_cast<size_t>(g.vertex_count()), -1);
    int covered = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        for (int x : parts[i]) {
            if (!g.has_vertex(x)) {
                throw std::invalid_argument("make_altitude: vertex " + std::to_string(x) +
                                            " out of range");
            }
            if (a.part_of[x] != -1) {
                throw std::invalid_argument("make_altitude: vertex " + std::to_string(x) +
                                            " in two parts");
            }
            a.part_of[x] = static_cast<int>(i);
            ++covered;
        }
    }
    if (covered != g.vertex_count()) {
        throw std::invalid_argument("make_altitude: parts do not cover V(G)");
    }
    for (const auto& [x, y] : g.edges()) {
        if (std::abs(a.part_of[x] - a.part_of[y]) >= 2) {
            throw std::invalid_argument("make_altitude: edge " + std::to_string(x) + "-" +
                                        std::to_string(y) + " spans parts " +
                                        std::to_string(a.part_of[x]) + " and " +
                                        std::to_string(a.part_of[y]));
        }
    }
    a.parts = parts;
    for (auto& part : a.parts) std::sort(part.begin(), part.end());
    return a;
}

Altitude bfs_altitude(const Graph& g, int root) {
    std::vector<int> dist = distances_from(g, root);
    int max_dist = 0;
    std::vector<int> stranded;
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (dist[x] == kUnreachable) {
            stranded.push_back(x);
        } else {
            max_dist = std::max(max_dist, dist[x]);
        }
    }
    std::vector<std::vector<int>> parts(static_cast<size_t>(max_dist) + 1);
    for (int x = 0; x < g.vertex_count(); ++x) {
        if (dist[x] != kUnreachable) parts[dist[x]].push_back(x);
    }
    if (!stranded.empty()) parts.push_back(std::move(stranded));
    return make_altitude(g, parts);
}

std::optional<PathForest> path_forest_from_vertices(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    for (int x : verts) {
        if (!g.has_vertex(x)) {
            throw std::invalid_argument("path_forest_from_vertices: vertex out of range");
        }
    }

    // induced neighbourhoods, rejecting any degree >= 3
    std::vector<std::vector<int>> local(verts.size());
    for (size_t i = 0; i < verts.size(); ++i) {
        for (int y : g.neighbors(verts[i])) {
            if (contains(verts, y)) {
                local[i].push_back(y);
                if (local[i].size() > 2) return std::nullopt;
            }
        }
    }

    auto index_of = [&](int x) {
        return static_cast<size_t>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };

    PathForest forest;
    forest.vertices = verts;
    std::vector<char> visited(verts.size(), 0);
    for (size_t i = 0; i < verts.size(); ++i) {
        if (visited[i] || local[i].size() == 2) continue;
        ForestComponent comp;
        int prev = -1;
        int cur = verts[i];
        while (true) {
            size_t ci = index_of(cur);
            visited[ci] = 1;
            comp.sequence.push_back(cur);
            int next = -1;
            for (int y : local[ci]) {
                if (y != prev) next = y;
            }
            if (next == -1) break;
            prev = cur;
            cur = next;
        }
        if (comp.sequence.back() < comp.sequence.front()) {
            std::reverse(comp.sequence.begin(), comp.sequence.end());
        }
        comp.end_a = comp.sequence.front();
        comp.end_b = comp.sequence.back();
        forest.components.push_back(std::move(comp));
    }
    for (char flag : visited) {
        if (!flag) return std::nullopt;  // leftover degree-2 vertices form a cycle
    }
    std::sort(forest.components.begin(), forest.components.end(),
              [](const ForestComponent& lhs, const ForestComponent& rhs) {
                  return std::tie(lhs.end_a, lhs.end_b) < std::tie(rhs.end_a, rhs.end_b);
              });
    return forest;
}

bool is_h_restricted(const PathForest& f, const std::vector<int>& x, int h) {
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());
    int in_x = 0;
    for (int v : f.vertices) {
        if (contains(sorted_x, v)) ++in_x;
    }
    if (in_x > h) return false;
    int endless = 0;
    for (const auto& comp : f.components) {
        if (!contains(sorted_x, comp.end_a) && !contains(sorted_x, comp.end_b)) ++endless;
    }
    return endless <= h;
}

bool is_h_narrow(const Graph& g, const Altitude& a, const PathForest& f, int h) {
    (void)g;
    for (int x : f.vertices) {
        if (x >= static_cast<int>(a.part_of.size()) || a.part_of[x] < 0) {
            throw std::invalid_argument("is_h_narrow: forest vertex outside altitude");
        }
    }
    for (int i = 0; i < a.part_count(); ++i) {
        int in_part = 0;
        for (int x : f.vertices) {
            if (a.part_of[x] == i) ++in_part;
        }
        if (in_part > h) return false;

        // runs of each component inside parts i..n with neither end in part i
        int endless = 0;
        for (const auto& comp : f.components) {
            size_t j = 0;
            while (j < comp.sequence.size()) {
                if (a.part_of[comp.sequence[j]] < i) {
                    ++j;
                    continue;
                }
                size_t k = j;
                while (k + 1 < comp.sequence.size() && a.part_of[comp.sequence[k + 1]] >= i) ++k;
                if (a.part_of[comp.sequence[j]] != i && a.part_of[comp.sequence[k]] != i) {
                    ++endless;
                }
                j = k + 1;
            }
        }
        if (endless > h) return false;
    }
    return true;
}

ClassKey class_key(const PathForest& f, const std::vector<int>& x) {
    std::vector<int> sorted_x = x;
    std::sort(sorted_x.begin(), sorted_x.end());
    ClassKey key;
    for (int v : f.vertices) {
        if (contains(sorted_x, v)) key.x_intersection.push_back(v);
    }
    key.component_count = f.component_count();
    for (const auto& comp : f.components) {
        key.profile.push_back({comp.end_a, comp.end_b, comp.length()});
    }
    std::sort(key.profile.begin(), key.profile.end());
    return key;
}

ClassTable init_top_classes(const Graph& g, const Altitude& a, int h) {
    ClassTable table;
    table.index = a.part_count() - 1;
    const std::vector<int> empty_part;
    const std::vector<int>& top = a.parts.empty() ? empty_part : a.parts.back();
    for_each_subset(top, h, [&](const std::vector<int>& s) {
        auto forest = path_forest_from_vertices(g, s);
        if (!forest) return;
        table.entries.emplace(class_key(*forest, top), std::move(*forest));
    });
    return table;
}

ClassTable dp_step(const Graph& g, const Altitude& a, int index, const ClassTable& next_table,
                   int h, const std::vector<ForestTarget>* targets, const DpOptions& opts) {
    ClassTable table;
    table.index = index;
    const std::vector<int>& part = a.parts[index];
    for (const auto& entry : next_table.entries) {
        const PathForest& rep = entry.second;
        for_each_subset(part, h, [&](const std::vector<int>& s) {
            std::vector<int> verts;
            verts.reserve(rep.vertices.size() + s.size());
            std::merge(rep.vertices.begin(), rep.vertices.end(), s.begin(), s.end(),
                       std::back_inserter(verts));
            auto forest = path_forest_from_vertices(g, verts);
            if (!forest) return;
            int endless = 0;
            for (const auto& comp : forest->components) {
                if (a.part_of[comp.end_a] == index || a.part_of[comp.end_b] == index) continue;
                ++endless;
                // both ends above this part: the component can never grow again
                if (targets && opts.prune_frozen) {
                    bool wanted = false;
                    for (const auto& t : *targets) {
                        if (component_matches(comp, t)) {
                            wanted = true;
                            break;
                        }
                    }
                    if (!wanted) return;
                }
            }
            if (endless > h) return;
            table.entries.emplace(class_key(*forest, part), std::move(*forest));
        });
    }
    return table;
}

std::vector<ClassTable> dp_tables(const Graph& g, const Altitude& a, int h,
                                  const std::vector<ForestTarget>* targets,
                                  const DpOptions& opts) {
    if (a.part_count() == 0) {
        ClassTable table;
        table.entries.emplace(ClassKey{}, PathForest{});
        return {table};
    }
    std::vector<ClassTable> tables(static_cast<size_t>(a.part_count()));
    tables.back() = init_top_classes(g, a, h);
    for (int i = a.part_count() - 2; i >= 0; --i) {
        tables[i] = dp_step(g, a, i, tables[i + 1], h, targets, opts);
    }
    return tables;
}

bool forest_matches_targets(const PathForest& f, const std::vector<ForestTarget>& targets) {
    if (f.component_count() != static_cast<int>(targets.size())) return false;
    std::vector<char> used(targets.size(), 0);
    std::function<bool(size_t)> match = [&](size_t c) {
        if (c == f.components.size()) return true;
        for (size_t j = 0; j < targets.size(); ++j) {
            if (used[j] || !component_matches(f.components[c], targets[j])) continue;
            used[j] = 1;
            if (match(c + 1)) return true;
            used[j] = 0;
        }
        return false;
    };
    return match(0);
}

std::optional<PathForest> find_path_forest(const Graph& g, const Altitude& a,
                                           const std::vector<ForestTarget>& targets, int h,
                                           const DpOptions& opts) {
    if (h < 1 || h > 6) throw std::invalid_argument("find_path_forest: h must be in 1..6");
    if (targets.size() > 4) {
        throw std::invalid_argument("find_path_forest: at most 4 target components");
    }
    for (const auto& t : targets) {
        if (!g.has_vertex(t.s) || !g.has_vertex(t.t)) {
            throw std::invalid_argument("find_path_forest: target endpoint out of range");
        }
        if (t.length && *t.length < 0) {
            throw std::invalid_argument("find_path_forest: negative target length");
        }
        if (t.length && *t.length == 0 && t.s != t.t) {
            throw std::invalid_argument("find_path_forest: zero-length target with distinct ends");
        }
        if (t.length && *t.length > 0 && t.s == t.t) {
            throw std::invalid_argument("find_path_forest: positive-length target with equal ends");
        }
    }
    std::vector<ClassTable> tables = dp_tables(g, a, h, &targets, opts);
    for (const auto& [key, rep] : tables[0].entries) {
        if (forest_matches_targets(rep, targets)) {
            verify_forest_result(g, a, rep, targets, h);
            return rep;
        }
    }
    return std::nullopt;
}

std::optional<Path> exact_length_path(const Graph& g, int u, int v, int k,
                                      const DpOptions& opts) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
        throw std::invalid_argument("exact_length_path: vertex out of range");
    }
    if (k < 0 || k > 5) throw std::invalid_argument("exact_length_path: k must be in 0..5");
    std::vector<int> dist = distances_from(g, u);
    if (dist[v] == kUnreachable) {
        throw std::invalid_argument("exact_length_path: v unreachable from u");
    }
    if (u == v) {
        if (k == 0) return Path{u};
        return std::nullopt;
    }
    Altitude alt = bfs_altitude(g, u);
    std::vector<ForestTarget> targets{{u, v, dist[v] + k}};
    auto forest = find_path_forest(g, alt, targets, k + 1, opts);
    if (!forest) return std::nullopt;
    Path p = forest->components.front().sequence;
    if (p.front() != u) std::reverse(p.begin(), p.end());
    return p;
}

std::optional<PathForest> disjoint_short_paths(const Graph& g, int root,
                                               const std::vector<std::pair<int, int>>& pairs,
                                               int h, const DpOptions& opts) {
    if (!g.has_vertex(root)) throw std::invalid_argument("disjoint_short_paths: bad root");
    // endpoints the BFS cannot reach live in the trailing altitude part, so
    // the query still answers rather than erroring out
    std::vector<ForestTarget> targets;
    for (const auto& [s, t] : pairs) {
        if (!g.has_vertex(s) || !g.has_vertex(t)) {
            throw std::invalid_argument("disjoint_short_paths: endpoint out of range");
        }
        targets.push_back({s, t, std::nullopt});
    }
    Altitude alt = bfs_altitude(g, root);
    return find_path_forest(g, alt, targets, h, opts);
}

}  // namespace nsp
