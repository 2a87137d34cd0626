#pragma once

#include <string>

#include "nsp/graph.hpp"

namespace nsp::fixtures {

struct Fixture {
    std::string name;
    Graph g;
    int u = 0;
    int v = 0;
};

// Vertex ids follow listing order starting at 0.

// u-a-b-v
inline Fixture path4() {
    return {"PATH4", build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), 0, 3};
}

// 5-cycle u-a-v-b-c-u; ids u=0 a=1 v=2 b=3 c=4
inline Fixture c5x() {
    return {"C5X", build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}), 0, 2};
}

// 6-cycle, u and v antipodal
inline Fixture c6x() {
    return {"C6X", build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}}), 0, 3};
}

// complete graph on {u,v,a,b}; ids u=0 v=1 a=2 b=3
inline Fixture k4() {
    return {"K4", build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}), 0, 1};
}

// u-a-v plus u-b-c-v; ids u=0 a=1 v=2 b=3 c=4
inline Fixture theta23() {
    return {"THETA23", build_graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}}), 0, 2};
}

// u-a-v, u-b-v, w adjacent to a and b; ids u=0 a=1 v=2 b=3 w=4
inline Fixture wgadget() {
    return {"WGADGET", build_graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 2}, {4, 1}, {4, 3}}), 0, 2};
}

// two disjoint edges a1-a2, b1-b2; ids a1=0 a2=1 b1=2 b2=3
inline Fixture ladder() {
    return {"LADDER", build_graph(4, {{0, 1}, {2, 3}}), 0, 3};
}

// ladder plus the rung a1-b1
inline Fixture ladder_plus() {
    return {"LADDER+", build_graph(4, {{0, 1}, {2, 3}, {0, 2}}), 0, 3};
}

// ids: u=0 s1=1 s2=2 s3=3 s4=4 p1=5 p2=6 p3=7 q2=8 q3=9 r4=10 v=11
inline Fixture zigzag12() {
    return {"ZIGZAG12",
            build_graph(12, {{0, 1},
                             {1, 2},
                             {2, 3},
                             {3, 4},
                             {4, 11},
                             {0, 5},
                             {5, 6},
                             {6, 7},
                             {7, 4},
                             {1, 8},
                             {7, 8},
                             {8, 9},
                             {9, 10},
                             {10, 11}}),
            0, 11};
}

// All vertices uv-straight, d(u,v) = 10, and the unique NSP has its monotone
// end segments separated by six layers, so the wide-gap case must handle it.
// Spine u-a1-..-a9-v (ids 1..9), descending branch a8-b7-b6-b5-b4-b3-t
// (b7..b3 = ids 11..15, t = 16), ascent t-c3-..-c9-v (ids 17..23), and the
// support chain u-w1-t (w1 = 24).
inline Fixture widegap25() {
    std::vector<std::pair<int, int>> edges;
    edges.push_back({0, 1});
    for (int i = 1; i < 9; ++i) edges.push_back({i, i + 1});
    edges.push_back({9, 10});
    edges.push_back({8, 11});  // a8-b7
    for (int i = 11; i < 15; ++i) edges.push_back({i, i + 1});
    edges.push_back({15, 16});  // b3-t
    edges.push_back({16, 17});  // t-c3
    for (int i = 17; i < 23; ++i) edges.push_back({i, i + 1});
    edges.push_back({23, 10});  // c9-v
    edges.push_back({0, 24});   // u-w1
    edges.push_back({24, 16});  // w1-t
    return {"WIDEGAP25", build_graph(25, edges), 0, 10};
}

}  // namespace nsp::fixtures
