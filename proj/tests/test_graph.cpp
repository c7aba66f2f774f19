#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lad/graph.hpp"
#include "lad/rng.hpp"

using namespace lad;

TEST_CASE("edge list construction: P3") {
    auto g = PortLabeledGraph::from_edge_list(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    CHECK_EQ(g.node_count(), 3);
    CHECK_EQ(g.edge_count(), 2);
    CHECK_EQ(g.degree(0), 1);
    CHECK_EQ(g.degree(1), 2);
    CHECK_EQ(g.degree(2), 1);
    CHECK(validate(g).empty());
}

TEST_CASE("edge list construction: disconnected input rejected") {
    CHECK_THROWS_AS(PortLabeledGraph::from_edge_list(3, {{0, 1}}, {1, 1, 1}),
                    DisconnectedGraph);
}

TEST_CASE("edge list construction: ring C4 with alternating colors") {
    auto g = PortLabeledGraph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {1, 2, 1, 2});
    CHECK_EQ(g.edge_count(), 4);
    CHECK_EQ(g.color(1), 2);
    CHECK(validate(g).empty());
}

TEST_CASE("edge list construction: rejects self loops and duplicates") {
    CHECK_THROWS_AS(PortLabeledGraph::from_edge_list(2, {{0, 0}, {0, 1}}, {1, 1}), SelfLoop);
    CHECK_THROWS_AS(PortLabeledGraph::from_edge_list(2, {{0, 1}, {1, 0}}, {1, 1}), DuplicateEdge);
    CHECK_THROWS_AS(PortLabeledGraph::from_edge_list(2, {{0, 1}}, {1, 5}), BadColorIndex);
}

TEST_CASE("generate: lower_bound n=10 k=5") {
    auto g = generate(GraphKind::lower_bound, {.n = 10, .k = 5});
    CHECK_EQ(g.node_count(), 10);
    // two K5-minus-2 blocks (8 intra edges each) plus 2 bridges
    CHECK_EQ(g.edge_count(), 18);
    CHECK_EQ(g.edge_count(), expected_lower_bound_edges(10, 5));
    for (Node v = 0; v < 9; ++v) CHECK_EQ(g.color(v), 1);
    CHECK_EQ(g.color(9), 2);
    CHECK(validate(g).empty());
}

TEST_CASE("generate: lower_bound rejects bad params") {
    CHECK_THROWS_AS(generate(GraphKind::lower_bound, {.n = 10, .k = 4}), BadParams);
    CHECK_THROWS_AS(generate(GraphKind::lower_bound, {.n = 12, .k = 5}), BadParams);
}

TEST_CASE("generate: path and ring shapes") {
    auto p = generate(GraphKind::path, {.n = 5});
    CHECK_EQ(p.edge_count(), 4);
    auto r = generate(GraphKind::ring, {.n = 6});
    CHECK_EQ(r.edge_count(), 6);
    for (Node v = 0; v < 6; ++v) CHECK_EQ(r.degree(v), 2);
}

TEST_CASE("generate: determinism and validity across kinds and seeds") {
    for (auto kind : {GraphKind::path, GraphKind::ring, GraphKind::tree,
                      GraphKind::random_connected}) {
        for (std::uint64_t seed = 0; seed < 6; ++seed) {
            GenParams params{.n = 17, .extra_edges = 9, .palette = 3, .seed = seed};
            auto a = generate(kind, params);
            auto b = generate(kind, params);
            CHECK(a == b);
            CHECK(validate(a).empty());
        }
    }
}

TEST_CASE("generate: lower_bound edge-count formula across a grid") {
    for (int k : {5, 6, 7}) {
        for (int groups : {2, 3, 4, 5}) {
            int n = k * groups;
            auto g = generate(GraphKind::lower_bound, {.n = n, .k = k});
            CHECK_EQ(g.edge_count(), expected_lower_bound_edges(n, k));
            CHECK(validate(g).empty());
        }
    }
}

TEST_CASE("validate: reports broken port symmetry") {
    auto g = PortLabeledGraph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}}, {1, 1, 1});
    // rebuild with a deliberately broken reverse port
    std::vector<std::vector<HalfEdge>> adj(3);
    for (Node v = 0; v < 3; ++v) adj[v] = g.incident(v);
    adj[0][0].rev = (adj[0][0].rev + 1) % 2;
    PortLabeledGraph broken(3, {1, 1, 1}, adj);
    auto issues = validate(broken);
    bool found = false;
    for (const auto& i : issues) found |= (i.what == "PortAsymmetry");
    CHECK(found);
}

TEST_CASE("validate: reports color out of range") {
    PortLabeledGraph g(2, {1, 7},
                       {{{1, 0}}, {{0, 0}}});
    auto issues = validate(g);
    bool found = false;
    for (const auto& i : issues) found |= (i.what == "BadColorIndex");
    CHECK(found);
}

TEST_CASE("feasible: color counting") {
    auto g = PortLabeledGraph::from_edge_list(3, {{0, 1}, {1, 2}}, {1, 1, 2});
    CHECK(feasible(g, {{1, 1}, {2, 2}}));
    auto g2 = PortLabeledGraph::from_edge_list(3, {{0, 1}, {1, 2}}, {1, 1, 1});
    CHECK_FALSE(feasible(g2, {{1, 2}}));
    CHECK_THROWS_AS(feasible(g2, {{1, 1}, {2, 1}, {3, 1}, {4, 1}}), BadParams);
}

TEST_CASE("feasible: one red robot on the lower bound family") {
    auto g = generate(GraphKind::lower_bound, {.n = 10, .k = 5});
    CHECK(feasible(g, {{1, 2}}));
    CHECK_FALSE(feasible(g, {{1, 2}, {2, 2}}));
}

TEST_CASE("serialize round trip is exact") {
    Rng rng(42);
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto g = generate(GraphKind::random_connected,
                          {.n = 13, .extra_edges = 7, .palette = 4, .seed = seed});
        auto text = serialize(g);
        auto back = parse_graph(text);
        CHECK(g == back);
        CHECK_EQ(serialize(back), text);
    }
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse_graph("garbage"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1 1\ncolor 0 1\ncolor 1 1\n"), ParseError);
    // asymmetric ports
    CHECK_THROWS_AS(parse_graph("2 1 1\ncolor 0 1\ncolor 1 1\nedge 0 0 1 3\n"), ParseError);
}
