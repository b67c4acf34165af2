#include "doctest.h"

#include "cfe/chromatic.hpp"
#include "cfe/decompose.hpp"
#include "cfe/error.hpp"
#include "cfe/verify.hpp"
#include "support/graphs.hpp"
#include "support/oracle.hpp"

using namespace cfe;
using namespace cfe::testing;

namespace {

oracle::EdgeList edge_list(const Graph& g) {
    oracle::EdgeList out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

std::vector<int> colours(const PartialColouring& c) {
    std::vector<int> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = c.raw(static_cast<EdgeId>(i));
    return out;
}

// Every edge the oracle finds unsatisfied must be isolated in g.
bool only_isolated_unsatisfied(const Graph& g, const PartialColouring& c) {
    const auto edges = edge_list(g);
    const auto col = colours(c);
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (!oracle::edge_ok(edges, col, e, oracle::Kind::hybrid) && !g.is_isolated_edge(static_cast<EdgeId>(e))) return false;
    return true;
}

VertexColouring identity_colouring(std::size_t n) {
    VertexColouring c{std::vector<int>(n), static_cast<int>(n)};
    for (std::size_t v = 0; v < n; ++v) c.colour[v] = static_cast<int>(v);
    return c;
}

}  // namespace

TEST_CASE("ceil_log2 and the colour budget") {
    CHECK(ceil_log2(0) == 0);
    CHECK(ceil_log2(1) == 0);
    CHECK(ceil_log2(2) == 1);
    CHECK(ceil_log2(3) == 2);
    CHECK(ceil_log2(4) == 2);
    CHECK(ceil_log2(5) == 3);
    CHECK(ceil_log2(1024) == 10);
    CHECK(chromatic_bound(3) == 22);
    CHECK(chromatic_bound(1) == 16);
}

TEST_CASE("partial colouring: one class means no edges") {
    const Graph g = build_graph(4, {});
    const ChromaticCFResult r = cf_by_chromatic_partial(g, VertexColouring{{0, 0, 0, 0}, 1});
    CHECK(r.colouring.coloured_count() == 0);
    CHECK(r.residue.empty());
}

TEST_CASE("partial colouring with two classes is a bipartite three-colouring") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Bipartite bp = random_bipartite(8, 10, 0.25, seed);
        const ChromaticCFResult r = cf_by_chromatic_partial(bp.graph, VertexColouring{bp.side, 2});
        CHECK(r.colouring.max_colour() <= 3);
        CHECK(r.residue.empty());
        CHECK(r.depth <= 1);
    }
    // A lone edge plus a path: the lone edge is the whole residue.
    const Graph g = build_graph(5, {{0, 1}, {2, 3}, {3, 4}});
    const ChromaticCFResult r = cf_by_chromatic_partial(g, VertexColouring{{0, 1, 0, 1, 0}, 2});
    CHECK(r.residue.ids() == std::vector<EdgeId>{0});
}

TEST_CASE("partial colouring of K4 with four classes") {
    const Graph k4 = complete(4);
    const ChromaticCFResult r = cf_by_chromatic_partial(k4, identity_colouring(4));
    CHECK(r.palette_size <= 6);
    CHECK(r.colouring.max_colour() <= 6);
    CHECK(is_matching(k4, r.residue));
    for (EdgeId e : is_conflict_free(k4, r.colouring, Mode::hybrid).unsatisfied) CHECK(r.residue.contains(e));
}

TEST_CASE("partial colouring rejects improper vertex colourings") {
    CHECK_THROWS_AS(cf_by_chromatic_partial(path(3), VertexColouring{{0, 0, 1}, 2}), PreconditionError);
    CHECK_THROWS_AS(cf_by_chromatic(path(3), VertexColouring{{0, 1}, 2}), PreconditionError);
}

TEST_CASE("cf_by_chromatic on forests, C5 and Petersen") {
    const Graph tree = build_graph(8, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {5, 6}, {5, 7}});
    const PartialColouring t = cf_by_chromatic(tree, default_vertex_colouring(tree));
    CHECK(t.palette_size() <= 16);
    CHECK(only_isolated_unsatisfied(tree, t));

    const Graph c5 = cycle(5);
    const PartialColouring c = cf_by_chromatic(c5, default_vertex_colouring(c5, true));
    CHECK(c.palette_size() <= 22);
    CHECK(only_isolated_unsatisfied(c5, c));

    const Graph p = petersen();
    const VertexColouring chi = default_vertex_colouring(p, true);
    CHECK(chi.count == 3);
    const PartialColouring pc = cf_by_chromatic(p, chi);
    CHECK(pc.palette_size() <= 22);
    CHECK(only_isolated_unsatisfied(p, pc));
}

TEST_CASE("cf_total_by_chromatic small cases") {
    const Graph edge = path(2);
    const PartialColouring e = cf_total_by_chromatic(edge, default_vertex_colouring(edge));
    CHECK(e.is_total());
    CHECK(e.palette_size() == 1);

    const Graph c5 = cycle(5);
    const PartialColouring c = cf_total_by_chromatic(c5, default_vertex_colouring(c5));
    CHECK(c.is_total());
    CHECK(oracle::colouring_ok(edge_list(c5), colours(c), oracle::Kind::hybrid));
}

TEST_CASE("random graphs: budget, residue and audit") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const int n = 5 + static_cast<int>(seed % 56);
        const double p = 0.05 + 0.1 * static_cast<double>(seed % 7);
        const Graph g = random_graph(n, p, seed);
        const VertexColouring vcol = default_vertex_colouring(g);

        const ChromaticCFResult partial = cf_by_chromatic_partial(g, vcol);
        CHECK(is_matching(g, partial.residue));
        CHECK(partial.depth <= ceil_log2(static_cast<std::uint64_t>(vcol.count)));

        const PartialColouring c = cf_by_chromatic(g, vcol);
        CHECK(static_cast<int>(c.palette_size()) <= chromatic_bound(vcol.count));
        CHECK(only_isolated_unsatisfied(g, c));

        const PartialColouring total = cf_total_by_chromatic(g, vcol);
        CHECK(total.is_total());
        CHECK(static_cast<int>(total.palette_size()) <= chromatic_bound(vcol.count) + 1);
        CHECK(is_conflict_free(g, total, Mode::hybrid).conflict_free);
        CHECK(is_conflict_free(g, total, Mode::closed).conflict_free);
        CHECK(is_conflict_free(g, total, Mode::open).conflict_free);
    }
}

TEST_CASE("large vertex palettes exercise deep recursion") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(40, 0.3, seed + 77);
        // Every vertex its own class: alpha = 40, six levels.
        const VertexColouring vcol = identity_colouring(g.vertex_count());
        const ChromaticCFResult partial = cf_by_chromatic_partial(g, vcol);
        CHECK(is_matching(g, partial.residue));
        CHECK(partial.colouring.max_colour() <= 18);
        const PartialColouring c = cf_by_chromatic(g, vcol);
        CHECK(static_cast<int>(c.palette_size()) <= chromatic_bound(40));
        CHECK(only_isolated_unsatisfied(g, c));
    }
}

TEST_CASE("colour offsets shift the palette") {
    const Graph g = random_graph(30, 0.2, 9);
    const VertexColouring vcol = default_vertex_colouring(g);
    const PartialColouring a = cf_by_chromatic(g, vcol, 1);
    const PartialColouring b = cf_by_chromatic(g, vcol, 101);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto e = static_cast<EdgeId>(i);
        CHECK(a.is_coloured(e) == b.is_coloured(e));
        if (a.is_coloured(e)) CHECK(b.raw(e) == a.raw(e) + 100);
    }
}
