#include "doctest.h"

#include <numeric>

#include "cfe/error.hpp"
#include "cfe/graph.hpp"
#include "cfe/graph_io.hpp"
#include "support/graphs.hpp"
#include "support/oracle.hpp"

using namespace cfe;
using namespace cfe::testing;

TEST_CASE("build_graph basics") {
    const Graph single = build_graph(2, {{0, 1}});
    CHECK(single.edge_count() == 1);
    CHECK(single.max_degree() == 1);
    CHECK(single.is_isolated_edge(0));

    const Graph c5 = cycle(5);
    CHECK(c5.edge_count() == 5);
    for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.min_degree() == 2);

    const Graph plus = c5_plus();
    std::vector<std::size_t> degrees;
    for (Vertex v = 0; v < 5; ++v) degrees.push_back(plus.degree(v));
    std::sort(degrees.rbegin(), degrees.rend());
    CHECK(degrees == std::vector<std::size_t>{3, 3, 2, 2, 2});
    CHECK(plus.max_degree() == 3);
}

TEST_CASE("build_graph rejects loops, duplicates, out-of-range vertices") {
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InputError);
    CHECK_THROWS_AS(build_graph(3, {{-1, 2}}), InputError);
}

TEST_CASE("incidence lists follow edge order") {
    const Graph g = build_graph(4, {{2, 3}, {0, 2}, {2, 1}});
    const auto inc = g.incident(2);
    CHECK(std::vector<EdgeId>(inc.begin(), inc.end()) == std::vector<EdgeId>{0, 1, 2});
    CHECK(g.edge(2).other(2) == 1);
}

TEST_CASE("edge_neighbourhood on P3") {
    const Graph p3 = path(3);
    CHECK(edge_neighbourhood(p3, 0, NeighbourhoodMode::open).ids() == std::vector<EdgeId>{1});
    CHECK(edge_neighbourhood(p3, 0, NeighbourhoodMode::closed).ids() == std::vector<EdgeId>{0, 1});
    CHECK_THROWS_AS(edge_neighbourhood(p3, 2, NeighbourhoodMode::open), InputError);
}

TEST_CASE("closed neighbourhood size is d(u)+d(v)-1, open is closed minus e") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const int n = 2 + static_cast<int>(seed % 11);
        const Graph g = random_graph(n, 0.4, seed);
        oracle::EdgeList list;
        for (const Edge& e : g.edges()) list.emplace_back(e.u, e.v);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            const auto e = static_cast<EdgeId>(i);
            const Edge& ed = g.edge(e);
            std::size_t brute = 0;
            for (const auto& f : list) brute += oracle::shares_endpoint(list[i], f) ? 1 : 0;
            const EdgeSet closed = edge_neighbourhood(g, e, NeighbourhoodMode::closed);
            CHECK(closed.size() == brute);
            CHECK(closed.size() == g.degree(ed.u) + g.degree(ed.v) - 1);
            EdgeSet expect_open = closed;
            expect_open.erase(e);
            CHECK(edge_neighbourhood(g, e, NeighbourhoodMode::open) == expect_open);
        }
    }
}

TEST_CASE("spanning_forest") {
    const Graph tree = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
    CHECK(spanning_forest(tree).size() == 4);

    CHECK(spanning_forest(cycle(5)).size() == 4);

    const Graph triangles = build_graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const EdgeSet f = spanning_forest(triangles);
    CHECK(f.size() == 4);
    int first = 0;
    for (EdgeId e : f.ids()) first += e < 3 ? 1 : 0;
    CHECK(first == 2);

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = random_graph(25, 0.1, seed);
        const EdgeSet forest = spanning_forest(g);
        CHECK(is_forest(g, forest));
        int components = 0;
        connected_components(g, &components);
        CHECK(forest.size() == g.vertex_count() - static_cast<std::size_t>(components));
        CHECK(spanning_forest(g) == forest);
    }
}

TEST_CASE("read_graph formats") {
    const Graph d = read_graph("p edge 3 2\ne 1 2\ne 2 3\n", GraphFormat::dimacs);
    CHECK(d.vertex_count() == 3);
    CHECK(d.edge(0) == Edge{0, 1});
    CHECK(d.edge(1) == Edge{1, 2});

    const Graph el = read_graph("0 1\n1 2\n", GraphFormat::edgelist);
    CHECK(el.edge_count() == 2);
    CHECK(el.edge(1) == Edge{1, 2});

    const Graph commented = read_graph("# header\n\n0 1  # trailing\n\t1 2\n", GraphFormat::edgelist);
    CHECK(commented.edge_count() == 2);
}

TEST_CASE("read_graph errors name the line") {
    try {
        read_graph("0 1\n1 x\n", GraphFormat::edgelist);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    try {
        read_graph("c hi\np edge 3 1\ne 1 4\n", GraphFormat::dimacs);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(read_graph("e 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(read_graph("p edge 3 2\ne 1 2\n", GraphFormat::dimacs), ParseError);
    CHECK_THROWS_AS(read_graph("0 1\n1 0\n", GraphFormat::edgelist), InputError);
    CHECK_THROWS_AS(read_graph("0 0\n", GraphFormat::edgelist), InputError);
}

TEST_CASE("read after write is the identity on edge lists") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(15, 0.3, seed);
        for (GraphFormat fmt : {GraphFormat::edgelist, GraphFormat::dimacs}) {
            const Graph back = read_graph(write_graph(g, fmt), fmt);
            REQUIRE(back.edge_count() == g.edge_count());
            for (std::size_t i = 0; i < g.edge_count(); ++i)
                CHECK(back.edge(static_cast<EdgeId>(i)) == g.edge(static_cast<EdgeId>(i)));
        }
        const Graph back = read_graph(write_graph(g, GraphFormat::dimacs), GraphFormat::dimacs);
        CHECK(back.vertex_count() == g.vertex_count());
    }
}

TEST_CASE("edge sets, partitions and subgraphs") {
    EdgeSet a = EdgeSet::from_ids(6, std::vector<EdgeId>{0, 2, 4});
    const EdgeSet b = EdgeSet::from_ids(6, std::vector<EdgeId>{2, 3});
    CHECK((a | b).ids() == std::vector<EdgeId>{0, 2, 3, 4});
    CHECK((a - b).ids() == std::vector<EdgeId>{0, 4});
    CHECK(a.intersects(b));
    CHECK_THROWS_AS(a.insert(6), InputError);

    CHECK_THROWS_AS(VertexPartition::from_blocks(3, {{0, 1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(VertexPartition::from_blocks(3, {{0}, {2}}), InputError);
    const VertexPartition part = VertexPartition::from_blocks(3, {{0, 2}, {1}});
    CHECK(part.block_of(2) == 0);
    CHECK(part.block(1) == std::vector<Vertex>{1});

    const Graph g = complete(4);
    const Subgraph sub = edge_subgraph(g, EdgeSet::from_ids(g.edge_count(), std::vector<EdgeId>{1, 5}));
    CHECK(sub.graph.vertex_count() == 4);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.parent_edge == std::vector<EdgeId>{1, 5});
    CHECK(sub.graph.edge(1) == g.edge(5));
}

TEST_CASE("matching, isolated edges and 2-colouring") {
    const Graph g = build_graph(7, {{0, 1}, {2, 3}, {3, 4}, {5, 6}});
    CHECK(isolated_edges(g).ids() == std::vector<EdgeId>{0, 3});
    CHECK(is_matching(g, EdgeSet::from_ids(4, std::vector<EdgeId>{0, 1, 3})));
    CHECK_FALSE(is_matching(g, EdgeSet::from_ids(4, std::vector<EdgeId>{1, 2})));
    CHECK(two_colouring(cycle(6)).size() == 6);
    CHECK(two_colouring(cycle(5)).empty());
}
