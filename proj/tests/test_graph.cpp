#include <algorithm>

#include "doctest.h"
#include "nsp/fixtures.hpp"
#include "nsp/graph.hpp"

using namespace nsp;

namespace {

// all labeled graphs on n vertices, edge bits in lexicographic pair order
std::vector<std::pair<int, int>> lex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    return pairs;
}

Graph decode(int n, const std::vector<std::pair<int, int>>& pairs, unsigned code) {
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 0; t < pairs.size(); ++t) {
        if (code & (1u << t)) edges.push_back(pairs[t]);
    }
    return Graph(n, edges);
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
            }
        }
    }
    return d;
}

}  // namespace

TEST_CASE("build_graph basics") {
    CHECK(build_graph(2, {{0, 1}}).edge_count() == 1);
    CHECK(build_graph(3, {{0, 1}, {0, 1}}).edge_count() == 1);  // duplicates collapse
    CHECK(build_graph(3, {{0, 1}, {1, 0}}).edge_count() == 1);
    CHECK_THROWS_AS(build_graph(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), std::invalid_argument);
    CHECK(build_graph(0, {}).vertex_count() == 0);
}

TEST_CASE("distances_from") {
    auto p4 = fixtures::path4();
    CHECK(distances_from(p4.g, 0) == std::vector<int>{0, 1, 2, 3});

    auto k4 = fixtures::k4();
    CHECK(distances_from(k4.g, 0) == std::vector<int>{0, 1, 1, 1});

    Graph two_comp = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
    auto dist = distances_from(two_comp, 0);
    CHECK(dist[1] == 1);
    CHECK(dist[2] == kUnreachable);
    CHECK(dist[4] == kUnreachable);
}

TEST_CASE("straight_set") {
    auto c5 = fixtures::c5x();
    CHECK(straight_set(c5.g, c5.u, c5.v) == std::vector<int>{0, 1, 2});

    auto p4 = fixtures::path4();
    CHECK(straight_set(p4.g, 0, 3) == std::vector<int>{0, 1, 2, 3});

    auto k4 = fixtures::k4();
    CHECK(straight_set(k4.g, 0, 1) == std::vector<int>{0, 1});

    Graph split = build_graph(3, {{0, 1}});
    CHECK_THROWS_AS(straight_set(split, 0, 2), std::invalid_argument);
}

TEST_CASE("layering") {
    auto p4 = fixtures::path4();
    Layering l = layering(p4.g, 0, 3);
    CHECK(l.dist == 3);
    CHECK(l.layers == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});

    auto c6 = fixtures::c6x();
    Layering lc6 = layering(c6.g, c6.u, c6.v);
    std::vector<size_t> sizes;
    for (const auto& layer : lc6.layers) sizes.push_back(layer.size());
    CHECK(sizes == std::vector<size_t>{1, 2, 2, 1});

    auto c5 = fixtures::c5x();
    Layering lc5 = layering(c5.g, c5.u, c5.v);
    CHECK(lc5.layers == std::vector<std::vector<int>>{{0}, {1}, {2}});

    CHECK_THROWS_AS(layering(build_graph(2, {}), 0, 1), std::invalid_argument);
}

TEST_CASE("is_induced_path") {
    auto c5 = fixtures::c5x();
    CHECK(is_induced_path(c5.g, {0, 4, 3, 2}));
    CHECK_FALSE(is_induced_path(c5.g, {0, 1, 2, 3, 4}));  // chord 0-4 closes the cycle
    auto k4 = fixtures::k4();
    CHECK_FALSE(is_induced_path(k4.g, {0, 2, 1}));  // chord uv
    CHECK(is_induced_path(k4.g, {0}));
    CHECK_FALSE(is_induced_path(k4.g, {}));
    CHECK_FALSE(is_induced_path(k4.g, {0, 0}));
    CHECK_FALSE(is_induced_path(k4.g, {0, 5}));
}

TEST_CASE("monotone_path") {
    auto p4 = fixtures::path4();
    Layering l4 = layering(p4.g, 0, 3);
    CHECK(monotone_path(p4.g, l4, 2, Direction::TowardU) == Path{2, 1, 0});

    auto c6 = fixtures::c6x();
    Layering l6 = layering(c6.g, c6.u, c6.v);
    Path down = monotone_path(c6.g, l6, 0, Direction::TowardV);
    CHECK(down.size() == 4);
    CHECK(is_monotone(l6, down));
    CHECK(is_induced_path(c6.g, down));

    auto c5 = fixtures::c5x();
    Layering l5 = layering(c5.g, c5.u, c5.v);
    CHECK(monotone_path(c5.g, l5, 1, Direction::TowardV) == Path{1, 2});

    CHECK_THROWS_AS(monotone_path(c5.g, l5, 3, Direction::TowardU), std::invalid_argument);
}

TEST_CASE("is_monotone") {
    auto p4 = fixtures::path4();
    Layering l4 = layering(p4.g, 0, 3);
    CHECK(is_monotone(l4, {0, 1, 2, 3}));

    auto c6 = fixtures::c6x();
    Layering l6 = layering(c6.g, c6.u, c6.v);
    CHECK_FALSE(is_monotone(l6, {1, 5}));  // both height-1 vertices
    CHECK(is_monotone(l6, {}));
    CHECK(is_monotone(l6, {2}));
}

TEST_CASE("fixed certificate from is_induced_path comment") {
    // the C5X arc through c and b really is induced; the short arc is too
    auto c5 = fixtures::c5x();
    CHECK(is_induced_path(c5.g, {0, 1, 2}));
}

TEST_CASE("layering invariants across small graphs") {
    for (int n = 2; n <= 5; ++n) {
        auto pairs = lex_pairs(n);
        for (unsigned code = 0; code < (1u << pairs.size()); ++code) {
            Graph g = decode(n, pairs, code);
            auto dist = distances_from(g, 0);
            for (int v = 1; v < n; ++v) {
                if (dist[v] == kUnreachable) continue;
                Layering l = layering(g, 0, v);
                // no edge joins layers two or more apart
                for (const auto& [a, b] : g.edges()) {
                    if (l.is_straight(a) && l.is_straight(b)) {
                        CHECK(std::abs(l.height[a] - l.height[b]) <= 1);
                    }
                }
                // middle layers reach both neighbours
                for (int i = 1; i < l.dist; ++i) {
                    for (int x : l.layers[i]) {
                        bool down = false;
                        bool up = false;
                        for (int y : g.neighbors(x)) {
                            if (!l.is_straight(y)) continue;
                            down = down || l.height[y] == i - 1;
                            up = up || l.height[y] == i + 1;
                        }
                        CHECK(down);
                        CHECK(up);
                    }
                }
                // monotone walks are monotone induced shortest paths
                for (int x = 0; x < n; ++x) {
                    if (!l.is_straight(x)) continue;
                    for (Direction dir : {Direction::TowardU, Direction::TowardV}) {
                        Path p = monotone_path(g, l, x, dir);
                        CHECK(is_monotone(l, p));
                        CHECK(is_induced_path(g, p));
                        int goal = dir == Direction::TowardU ? 0 : l.dist;
                        CHECK(static_cast<int>(p.size()) - 1 == std::abs(l.height[x] - goal));
                    }
                }
                // straightness is symmetric and heights complement
                CHECK(straight_set(g, 0, v) == straight_set(g, v, 0));
                Layering back = layering(g, v, 0);
                for (int x = 0; x < n; ++x) {
                    CHECK(l.is_straight(x) == back.is_straight(x));
                    if (l.is_straight(x)) CHECK(back.height[x] == l.dist - l.height[x]);
                }
            }
        }
    }
}

TEST_CASE("bfs distances match Floyd-Warshall on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n) {
        auto pairs = lex_pairs(n);
        for (unsigned code = 0; code < (1u << pairs.size()); ++code) {
            Graph g = decode(n, pairs, code);
            auto all = floyd_warshall(g);
            for (int s = 0; s < n; ++s) {
                auto dist = distances_from(g, s);
                for (int t = 0; t < n; ++t) {
                    int want = all[s][t] >= (1 << 20) ? kUnreachable : all[s][t];
                    REQUIRE(dist[t] == want);
                }
            }
        }
    }
}
