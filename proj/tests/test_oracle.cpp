#include <algorithm>

#include "doctest.h"
#include "nsp/fixtures.hpp"
#include "nsp/layer_dp.hpp"
#include "nsp/oracle.hpp"

using namespace nsp;

namespace {

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

// independent second oracle: enumerate plain simple paths, then filter
void simple_paths(const Graph& g, int v, Path& prefix, std::vector<char>& used,
                  std::vector<Path>& out) {
    if (prefix.back() == v) {
        out.push_back(prefix);
        return;
    }
    for (int y : g.neighbors(prefix.back())) {
        if (used[y]) continue;
        used[y] = 1;
        prefix.push_back(y);
        simple_paths(g, v, prefix, used, out);
        prefix.pop_back();
        used[y] = 0;
    }
}

std::vector<Path> induced_paths_by_filtering(const Graph& g, int u, int v) {
    Path prefix{u};
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    used[u] = 1;
    std::vector<Path> all;
    simple_paths(g, v, prefix, used, all);
    std::vector<Path> induced;
    for (const Path& p : all) {
        if (is_induced_path(g, p)) induced.push_back(p);
    }
    std::sort(induced.begin(), induced.end());
    return induced;
}

}  // namespace

TEST_CASE("enumerate_induced_paths on fixtures") {
    auto p4 = fixtures::path4();
    CHECK(enumerate_induced_paths(p4.g, 0, 3) == std::vector<Path>{{0, 1, 2, 3}});

    auto c5 = fixtures::c5x();
    auto paths = enumerate_induced_paths(c5.g, c5.u, c5.v);
    std::sort(paths.begin(), paths.end());
    CHECK(paths == std::vector<Path>{{0, 1, 2}, {0, 4, 3, 2}});

    auto k4 = fixtures::k4();
    CHECK(enumerate_induced_paths(k4.g, 0, 1) == std::vector<Path>{{0, 1}});

    CHECK(enumerate_induced_paths(k4.g, 0, 0) == std::vector<Path>{{0}});
    CHECK(enumerate_induced_paths(c5.g, c5.u, c5.v, 1).size() == 1);
}

TEST_CASE("induced_length_set") {
    auto c6 = fixtures::c6x();
    CHECK(induced_length_set(c6.g, c6.u, c6.v) == std::vector<int>{3});

    auto c5 = fixtures::c5x();
    CHECK(induced_length_set(c5.g, c5.u, c5.v) == std::vector<int>{2, 3});

    auto z = fixtures::zigzag12();
    auto lengths = induced_length_set(z.g, z.u, z.v);
    CHECK(std::binary_search(lengths.begin(), lengths.end(), 5));
    CHECK(lengths.back() >= 7);

    Graph split = build_graph(2, {});
    CHECK(induced_length_set(split, 0, 1).empty());
}

TEST_CASE("oracle_has_nsp") {
    auto c5 = fixtures::c5x();
    CHECK(oracle_has_nsp(c5.g, c5.u, c5.v));
    auto k4 = fixtures::k4();
    CHECK_FALSE(oracle_has_nsp(k4.g, k4.u, k4.v));
    Graph split = build_graph(2, {});
    CHECK_FALSE(oracle_has_nsp(split, 0, 1));
}

TEST_CASE("oracle_path_forest on the ladder pair") {
    auto lad = fixtures::ladder();
    Altitude alt = bfs_altitude(lad.g, 0);
    std::vector<ForestTarget> targets{{0, 1, 1}, {2, 3, 1}};
    CHECK(oracle_path_forest(lad.g, alt, targets, 2));

    auto ladp = fixtures::ladder_plus();
    Altitude altp = bfs_altitude(ladp.g, 0);
    CHECK_FALSE(oracle_path_forest(ladp.g, altp, targets, 2));

    CHECK(oracle_path_forest(lad.g, alt, {}, 1));  // empty forest

    CHECK_THROWS_AS(oracle_path_forest(build_graph(17, {}), alt, {}, 1), std::invalid_argument);
}

TEST_CASE("dual oracle agreement on all graphs up to 6 vertices") {
    for (int n = 2; n <= 6; ++n) {
        auto pairs = lex_pairs(n);
        for (unsigned code = 0; code < (1u << pairs.size()); ++code) {
            Graph g = decode(n, pairs, code);
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    auto fast = enumerate_induced_paths(g, u, v);
                    for (const Path& p : fast) REQUIRE(is_induced_path(g, p));
                    std::sort(fast.begin(), fast.end());
                    REQUIRE(fast == induced_paths_by_filtering(g, u, v));
                    REQUIRE(oracle_has_nsp(g, u, v) == oracle_has_nsp(g, v, u));
                }
            }
        }
    }
}
