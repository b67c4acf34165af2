#pragma once

// Small graph families and seeded random generators for tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cfe/graph.hpp"

namespace cfe::testing {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline Graph from_pairs(std::size_t n, const Pairs& p) { return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(p)); }

inline Graph path(int vertices) {
    Pairs p;
    for (int i = 0; i + 1 < vertices; ++i) p.emplace_back(i, i + 1);
    return from_pairs(static_cast<std::size_t>(vertices), p);
}

inline Graph cycle(int n) {
    Pairs p;
    for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
    return from_pairs(static_cast<std::size_t>(n), p);
}

/// C5 plus the chord 0-2: degree sequence (3,3,2,2,2).
inline Graph c5_plus() {
    Pairs p{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}};
    return from_pairs(5, p);
}

/// K_{1,m} with centre 0.
inline Graph star(int m) {
    Pairs p;
    for (int i = 1; i <= m; ++i) p.emplace_back(0, i);
    return from_pairs(static_cast<std::size_t>(m + 1), p);
}

inline Graph complete(int n) {
    Pairs p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return from_pairs(static_cast<std::size_t>(n), p);
}

/// K_{a,b} with sides 0..a-1 and a..a+b-1.
inline Graph complete_bipartite(int a, int b) {
    Pairs p;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) p.emplace_back(i, a + j);
    return from_pairs(static_cast<std::size_t>(a + b), p);
}

inline Graph petersen() {
    Pairs p;
    for (int i = 0; i < 5; ++i) {
        p.emplace_back(i, (i + 1) % 5);
        p.emplace_back(i, i + 5);
        p.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return from_pairs(10, p);
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Pairs pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) pairs.emplace_back(i, j);
    return from_pairs(static_cast<std::size_t>(n), pairs);
}

/// Random graph with exactly `m` edges on `n` vertices (m <= n(n-1)/2).
inline Graph random_graph_m(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    Pairs all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(m));
    return from_pairs(static_cast<std::size_t>(n), all);
}

/// Random bipartite graph with sides X = 0..a-1, Y = a..a+b-1, with every
/// trivial (single-edge) component removed. `side[v]` is 0 on X, 1 on Y.
struct Bipartite {
    Graph graph;
    std::vector<int> side;
};

inline Bipartite random_bipartite(int a, int b, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Pairs pairs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (coin(rng)) pairs.emplace_back(i, a + j);
    const std::size_t n = static_cast<std::size_t>(a + b);
    Graph g = from_pairs(n, pairs);
    Pairs kept;
    for (const Edge& e : g.edges())
        if (!(g.degree(e.u) == 1 && g.degree(e.v) == 1)) kept.emplace_back(e.u, e.v);
    std::vector<int> side(n, 0);
    for (int j = 0; j < b; ++j) side[static_cast<std::size_t>(a + j)] = 1;
    return {from_pairs(n, kept), side};
}

inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
    Pairs p;
    for (const Edge& e : g.edges()) p.emplace_back(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
    return from_pairs(g.vertex_count(), p);
}

}  // namespace cfe::testing
