#include <algorithm>

#include "doctest.h"
#include "nsp/corpus.hpp"
#include "nsp/fixtures.hpp"
#include "nsp/io.hpp"
#include "nsp/oracle.hpp"
#include "nsp/solver.hpp"

using namespace nsp;

TEST_CASE("edge list parsing") {
    GraphDocument doc = parse_graph("4 0 3\n0 1\n1 2\n2 3\n", DocFormat::EdgeList);
    CHECK(doc.n == 4);
    CHECK(doc.u == 0);
    CHECK(doc.v == 3);
    CHECK(doc.edges.size() == 3);

    // duplicates collapse, comments and blank lines are skipped
    GraphDocument dup = parse_graph("3 0 2\n\n# a comment\n0 1\n1 0\n1 2\n", DocFormat::EdgeList);
    CHECK(dup.edges.size() == 2);

    CHECK_THROWS_WITH_AS(parse_graph("2 0 1\n0 0\n", DocFormat::EdgeList),
                         "edge list line 2: self-loop 0 0", std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2 0 1\n0 5\n", DocFormat::EdgeList), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2 0 9\n0 1\n", DocFormat::EdgeList), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("", DocFormat::EdgeList), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2 0\n", DocFormat::EdgeList), std::invalid_argument);
}

TEST_CASE("structured parsing") {
    GraphDocument doc = parse_graph(
        R"({"n": 4, "u": 0, "v": 3, "edges": [[0,1],[1,2],[2,3],[1,2]], "name": "p4"})",
        DocFormat::Structured);
    CHECK(doc.n == 4);
    CHECK(doc.name == "p4");
    CHECK(doc.edges.size() == 3);  // duplicate removed

    GraphDocument forest = parse_graph(
        R"({"n": 4, "u": 0, "v": 3, "edges": [[0,1],[2,3]], "root": 0,
            "targets": [[0,1,1],[2,3,null]]})",
        DocFormat::Structured);
    REQUIRE(forest.targets.size() == 2);
    CHECK(forest.targets[0].length == 1);
    CHECK_FALSE(forest.targets[1].length.has_value());

    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "v": 1})", DocFormat::Structured),
                    std::invalid_argument);  // missing u
    CHECK_THROWS_AS(parse_graph(R"({"n": 2, "u": 0, "v": 1, "edges": [[0,0]]})",
                                DocFormat::Structured),
                    std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("{broken", DocFormat::Structured), std::invalid_argument);
}

TEST_CASE("round trips") {
    for (const auto& fx : {fixtures::path4(), fixtures::c5x(), fixtures::zigzag12()}) {
        GraphDocument doc;
        doc.name = fx.name;
        doc.n = fx.g.vertex_count();
        doc.edges = fx.g.edges();
        doc.u = fx.u;
        doc.v = fx.v;
        for (DocFormat fmt : {DocFormat::EdgeList, DocFormat::Structured}) {
            GraphDocument back = parse_graph(serialize(doc, fmt), fmt);
            if (fmt == DocFormat::EdgeList) back.name = doc.name;  // edge lists carry no name
            CHECK(back == doc);
        }
    }
}

TEST_CASE("format sniffing") {
    CHECK(sniff_format("  {\"n\": 1}") == DocFormat::Structured);
    CHECK(sniff_format("3 0 2\n") == DocFormat::EdgeList);
}

TEST_CASE("gnp generator") {
    GraphDocument empty = gen_gnp(5, 0.0, 1);
    CHECK(empty.edges.empty());
    GraphDocument complete = gen_gnp(5, 1.0, 1);
    CHECK(complete.edges.size() == 10);

    GraphDocument a = gen_gnp(8, 0.3, 42);
    GraphDocument b = gen_gnp(8, 0.3, 42);
    CHECK(serialize(a, DocFormat::Structured) == serialize(b, DocFormat::Structured));
    CHECK(a.u == 0);
    CHECK(a.v == 7);
    CHECK(gen_gnp(8, 0.3, 43).edges != a.edges);

    CHECK_THROWS_AS(gen_gnp(1, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_gnp(5, 1.5, 1), std::invalid_argument);
}

TEST_CASE("layered generator") {
    GraphDocument p3 = gen_layered({1, 1, 1}, 1.0, 1);
    CHECK(p3.n == 3);
    CHECK(p3.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    GraphDocument dia = gen_layered({1, 2, 1}, 1.0, 1);
    CHECK(dia.n == 4);
    CHECK(induced_length_set(dia.to_graph(), dia.u, dia.v) == std::vector<int>{2});

    // p = 0 leaves only the repair edges; every middle vertex reaches both sides
    GraphDocument sparse = gen_layered({1, 3, 3, 1}, 0.0, 9);
    Graph g = sparse.to_graph();
    auto dist = distances_from(g, 0);
    CHECK(dist[sparse.v] == 3);
    for (int x = 1; x < sparse.n - 1; ++x) CHECK(g.degree(x) >= 2);

    GraphDocument a = gen_layered({1, 2, 2, 1}, 0.5, 7);
    GraphDocument b = gen_layered({1, 2, 2, 1}, 0.5, 7);
    CHECK(serialize(a, DocFormat::EdgeList) == serialize(b, DocFormat::EdgeList));

    CHECK_THROWS_AS(gen_layered({2, 1}, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_layered({}, 0.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_layered({1, 0, 1}, 0.5, 1), std::invalid_argument);
}

TEST_CASE("layered instances are fully straight") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        GraphDocument doc = gen_layered({1, 2, 3, 2, 1}, 0.4, seed);
        Graph g = doc.to_graph();
        CHECK(static_cast<int>(straight_set(g, doc.u, doc.v).size()) == g.vertex_count());
    }
}

TEST_CASE("report grammar") {
    auto c5 = fixtures::c5x();
    NspOutcome outcome = find_nsp(c5.g, c5.u, c5.v);
    CHECK(format_report_nsp(2, outcome, std::nullopt) == "VERDICT yes\nDIST 2\nCERT 0 4 3 2\n");
    CHECK(format_report_nsp(1, NspOutcome{}, std::nullopt) == "VERDICT no\nDIST 1\n");
    CHECK(format_report_nsp(1, NspOutcome{}, 12) == "VERDICT no\nDIST 1\nTIME 12\n");

    CHECK(format_report_oracle(2, true, {2, 3}, std::nullopt) ==
          "VERDICT yes\nDIST 2\nLENGTHS 2 3\n");

    auto wg = fixtures::wgadget();
    StraightenResult res = straighten(wg.g, wg.u, wg.v);
    std::string report = format_report_straighten(res, 2, std::nullopt);
    CHECK(report.find("VERDICT no\n") == 0);
    CHECK(report.find("REDUCED {") != std::string::npos);
    CHECK(report.find("MAP 0 1 2 3") != std::string::npos);
    CHECK(report.find("RECORD {") != std::string::npos);
}

TEST_CASE("splitmix64 reference stream") {
    // reference values from the public-domain splitmix64.c test vector
    SplitMix64 rng(1234567);
    CHECK(rng.next() == 6457827717110365317ull);
    CHECK(rng.next() == 3203168211198807973ull);
    CHECK(rng.next() == 9817491932198370423ull);
}

TEST_CASE("determinism sweep is clean") {
    DeterminismStats stats = determinism_sweep();
    CHECK(stats.cases > 0);
    CHECK(stats.mismatches == 0);
}
