#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace cfe {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    Vertex u;
    Vertex v;

    Vertex other(Vertex w) const noexcept { return w == u ? v : u; }
    bool has(Vertex w) const noexcept { return w == u || w == v; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Immutable simple graph on vertices 0..n-1. Edge ids are dense and follow
/// insertion order; each incidence list is sorted by edge id.
class Graph {
public:
    Graph() = default;

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const EdgeId> incident(Vertex v) const {
        const auto b = offsets_[static_cast<std::size_t>(v)];
        const auto e = offsets_[static_cast<std::size_t>(v) + 1];
        return {incidence_.data() + b, e - b};
    }
    std::size_t degree(Vertex v) const { return incident(v).size(); }

    std::size_t max_degree() const noexcept { return max_degree_; }
    /// Minimum degree over all vertices (0 when some vertex is isolated).
    std::size_t min_degree() const noexcept { return min_degree_; }

    bool valid_vertex(Vertex v) const noexcept {
        return v >= 0 && static_cast<std::size_t>(v) < n_;
    }
    bool valid_edge(EdgeId e) const noexcept {
        return e >= 0 && static_cast<std::size_t>(e) < edges_.size();
    }

    /// An edge is isolated when no other edge shares an endpoint with it.
    bool is_isolated_edge(EdgeId e) const {
        const Edge& ed = edge(e);
        return degree(ed.u) == 1 && degree(ed.v) == 1;
    }

    friend Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> offsets_{0};
    std::vector<EdgeId> incidence_;
    std::size_t max_degree_ = 0;
    std::size_t min_degree_ = 0;
};

/// Throws InputError on loops, duplicate pairs or out-of-range endpoints.
Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs);
Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs);

/// Set of edge ids over a graph with a fixed number of edges.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(std::size_t universe) : member_(universe, 0) {}
    static EdgeSet all(std::size_t universe);
    static EdgeSet from_ids(std::size_t universe, std::span<const EdgeId> ids);

    std::size_t universe() const noexcept { return member_.size(); }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(EdgeId e) const { return member_[static_cast<std::size_t>(e)] != 0; }
    void insert(EdgeId e);
    void erase(EdgeId e);

    /// Member ids in increasing order.
    std::vector<EdgeId> ids() const;

    EdgeSet& operator|=(const EdgeSet& other);
    EdgeSet& operator-=(const EdgeSet& other);
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
    bool intersects(const EdgeSet& other) const;
    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<std::uint8_t> member_;
    std::size_t count_ = 0;
};

/// Disjoint vertex blocks covering 0..n-1.
class VertexPartition {
public:
    VertexPartition() = default;
    /// `block_of[v]` names the block of v; blocks are 0..block_count-1.
    VertexPartition(std::vector<int> block_of, int block_count);
    /// Throws InputError unless the blocks are disjoint and cover 0..n-1.
    static VertexPartition from_blocks(std::size_t n, const std::vector<std::vector<Vertex>>& blocks);

    std::size_t universe() const noexcept { return block_of_.size(); }
    int block_count() const noexcept { return block_count_; }
    int block_of(Vertex v) const { return block_of_[static_cast<std::size_t>(v)]; }
    std::vector<Vertex> block(int b) const;

private:
    std::vector<int> block_of_;
    int block_count_ = 0;
};

/// A subgraph on the same vertex set as its parent, with the map from its
/// own edge ids back to the parent's.
struct Subgraph {
    Graph graph;
    std::vector<EdgeId> parent_edge;

    EdgeSet lift(const EdgeSet& local, std::size_t parent_edges) const;
};

Subgraph edge_subgraph(const Graph& g, const EdgeSet& edges);

enum class NeighbourhoodMode { closed, open };

/// E[e] (closed) or E(e) (open) as an edge set.
EdgeSet edge_neighbourhood(const Graph& g, EdgeId e, NeighbourhoodMode mode);

/// BFS spanning forest, one tree per component, roots at the lowest vertex id.
EdgeSet spanning_forest(const Graph& g);

/// Component label per vertex (isolated vertices get their own label).
std::vector<int> connected_components(const Graph& g, int* component_count = nullptr);

/// Edges with no neighbouring edge.
EdgeSet isolated_edges(const Graph& g);

bool is_matching(const Graph& g, const EdgeSet& edges);
bool is_forest(const Graph& g, const EdgeSet& edges);

/// Proper 2-colouring (0/1 per vertex, lowest vertex of each component gets 0),
/// or an empty vector when g is not bipartite.
std::vector<int> two_colouring(const Graph& g);

}  // namespace cfe
