#include "cfe/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "cfe/error.hpp"

namespace cfe {

Graph build_graph(std::size_t n, std::span<const std::pair<Vertex, Vertex>> pairs) {
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());

    std::vector<std::pair<std::pair<Vertex, Vertex>, std::size_t>> keyed;
    keyed.reserve(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto [u, v] = pairs[i];
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n) {
            throw InputError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," +
                             std::to_string(v) + "): vertex out of range [0," + std::to_string(n) + ")");
        }
        if (u == v) {
            throw InputError("edge " + std::to_string(i) + ": loop at vertex " + std::to_string(u));
        }
        g.edges_.push_back({u, v});
        keyed.push_back({{std::min(u, v), std::max(u, v)}, i});
    }
    std::sort(keyed.begin(), keyed.end());
    for (std::size_t i = 1; i < keyed.size(); ++i) {
        if (keyed[i].first == keyed[i - 1].first) {
            throw InputError("edge " + std::to_string(keyed[i].second) + " duplicates edge " +
                             std::to_string(keyed[i - 1].second) + " (" +
                             std::to_string(keyed[i].first.first) + "," +
                             std::to_string(keyed[i].first.second) + ")");
        }
    }

    std::vector<std::size_t> degree(n, 0);
    for (const Edge& e : g.edges_) {
        ++degree[static_cast<std::size_t>(e.u)];
        ++degree[static_cast<std::size_t>(e.v)];
    }
    g.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
    g.incidence_.assign(g.offsets_[n], 0);
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (std::size_t i = 0; i < g.edges_.size(); ++i) {
        const Edge& e = g.edges_[i];
        g.incidence_[fill[static_cast<std::size_t>(e.u)]++] = static_cast<EdgeId>(i);
        g.incidence_[fill[static_cast<std::size_t>(e.v)]++] = static_cast<EdgeId>(i);
    }
    if (n > 0) {
        g.max_degree_ = *std::max_element(degree.begin(), degree.end());
        g.min_degree_ = *std::min_element(degree.begin(), degree.end());
    }
    return g;
}

Graph build_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    const std::vector<std::pair<Vertex, Vertex>> v(pairs);
    return build_graph(n, std::span<const std::pair<Vertex, Vertex>>(v));
}

EdgeSet EdgeSet::all(std::size_t universe) {
    EdgeSet s(universe);
    std::fill(s.member_.begin(), s.member_.end(), 1);
    s.count_ = universe;
    return s;
}

EdgeSet EdgeSet::from_ids(std::size_t universe, std::span<const EdgeId> ids) {
    EdgeSet s(universe);
    for (EdgeId e : ids) s.insert(e);
    return s;
}

void EdgeSet::insert(EdgeId e) {
    if (e < 0 || static_cast<std::size_t>(e) >= member_.size()) {
        throw InputError("edge id " + std::to_string(e) + " outside edge set universe");
    }
    auto& m = member_[static_cast<std::size_t>(e)];
    if (!m) {
        m = 1;
        ++count_;
    }
}

void EdgeSet::erase(EdgeId e) {
    auto& m = member_[static_cast<std::size_t>(e)];
    if (m) {
        m = 0;
        --count_;
    }
}

std::vector<EdgeId> EdgeSet::ids() const {
    std::vector<EdgeId> out;
    out.reserve(count_);
    for (std::size_t i = 0; i < member_.size(); ++i) {
        if (member_[i]) out.push_back(static_cast<EdgeId>(i));
    }
    return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
    for (std::size_t i = 0; i < other.member_.size(); ++i) {
        if (other.member_[i]) insert(static_cast<EdgeId>(i));
    }
    return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
    for (std::size_t i = 0; i < other.member_.size() && i < member_.size(); ++i) {
        if (other.member_[i]) erase(static_cast<EdgeId>(i));
    }
    return *this;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
    const std::size_t n = std::min(member_.size(), other.member_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (member_[i] && other.member_[i]) return true;
    }
    return false;
}

VertexPartition::VertexPartition(std::vector<int> block_of, int block_count)
    : block_of_(std::move(block_of)), block_count_(block_count) {
    for (int b : block_of_) {
        if (b < 0 || b >= block_count_) throw InputError("vertex partition: block index out of range");
    }
}

VertexPartition VertexPartition::from_blocks(std::size_t n, const std::vector<std::vector<Vertex>>& blocks) {
    std::vector<int> block_of(n, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Vertex v : blocks[b]) {
            if (v < 0 || static_cast<std::size_t>(v) >= n) {
                throw InputError("vertex partition: vertex " + std::to_string(v) + " out of range");
            }
            if (block_of[static_cast<std::size_t>(v)] != -1) {
                throw InputError("vertex partition: vertex " + std::to_string(v) + " in two blocks");
            }
            block_of[static_cast<std::size_t>(v)] = static_cast<int>(b);
        }
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (block_of[v] == -1) {
            throw InputError("vertex partition: vertex " + std::to_string(v) + " not covered");
        }
    }
    return VertexPartition(std::move(block_of), static_cast<int>(blocks.size()));
}

std::vector<Vertex> VertexPartition::block(int b) const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < block_of_.size(); ++v) {
        if (block_of_[v] == b) out.push_back(static_cast<Vertex>(v));
    }
    return out;
}

EdgeSet Subgraph::lift(const EdgeSet& local, std::size_t parent_edges) const {
    EdgeSet out(parent_edges);
    for (EdgeId e : local.ids()) out.insert(parent_edge[static_cast<std::size_t>(e)]);
    return out;
}

Subgraph edge_subgraph(const Graph& g, const EdgeSet& edges) {
    Subgraph sub;
    std::vector<std::pair<Vertex, Vertex>> pairs;
    pairs.reserve(edges.size());
    sub.parent_edge.reserve(edges.size());
    for (EdgeId e : edges.ids()) {
        const Edge& ed = g.edge(e);
        pairs.emplace_back(ed.u, ed.v);
        sub.parent_edge.push_back(e);
    }
    sub.graph = build_graph(g.vertex_count(), pairs);
    return sub;
}

EdgeSet edge_neighbourhood(const Graph& g, EdgeId e, NeighbourhoodMode mode) {
    if (!g.valid_edge(e)) throw InputError("invalid edge id " + std::to_string(e));
    EdgeSet out(g.edge_count());
    const Edge& ed = g.edge(e);
    for (EdgeId f : g.incident(ed.u)) out.insert(f);
    for (EdgeId f : g.incident(ed.v)) out.insert(f);
    if (mode == NeighbourhoodMode::open) out.erase(e);
    return out;
}

EdgeSet spanning_forest(const Graph& g) {
    EdgeSet forest(g.edge_count());
    std::vector<std::uint8_t> seen(g.vertex_count(), 0);
    std::queue<Vertex> q;
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        q.push(static_cast<Vertex>(root));
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    forest.insert(e);
                    q.push(w);
                }
            }
        }
    }
    return forest;
}

std::vector<int> connected_components(const Graph& g, int* component_count) {
    std::vector<int> comp(g.vertex_count(), -1);
    int next = 0;
    std::vector<Vertex> stack;
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] != -1) continue;
        comp[root] = next;
        stack.push_back(static_cast<Vertex>(root));
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                if (comp[static_cast<std::size_t>(w)] == -1) {
                    comp[static_cast<std::size_t>(w)] = next;
                    stack.push_back(w);
                }
            }
        }
        ++next;
    }
    if (component_count) *component_count = next;
    return comp;
}

EdgeSet isolated_edges(const Graph& g) {
    EdgeSet out(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (g.is_isolated_edge(static_cast<EdgeId>(e))) out.insert(static_cast<EdgeId>(e));
    }
    return out;
}

bool is_matching(const Graph& g, const EdgeSet& edges) {
    std::vector<std::uint8_t> used(g.vertex_count(), 0);
    for (EdgeId e : edges.ids()) {
        const Edge& ed = g.edge(e);
        if (used[static_cast<std::size_t>(ed.u)] || used[static_cast<std::size_t>(ed.v)]) return false;
        used[static_cast<std::size_t>(ed.u)] = used[static_cast<std::size_t>(ed.v)] = 1;
    }
    return true;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
};

}  // namespace

bool is_forest(const Graph& g, const EdgeSet& edges) {
    DisjointSets ds(g.vertex_count());
    for (EdgeId e : edges.ids()) {
        const Edge& ed = g.edge(e);
        if (!ds.unite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) return false;
    }
    return true;
}

std::vector<int> two_colouring(const Graph& g) {
    std::vector<int> side(g.vertex_count(), -1);
    std::queue<Vertex> q;
    for (std::size_t root = 0; root < g.vertex_count(); ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        q.push(static_cast<Vertex>(root));
        while (!q.empty()) {
            const Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                auto& sw = side[static_cast<std::size_t>(w)];
                if (sw == -1) {
                    sw = 1 - side[static_cast<std::size_t>(v)];
                    q.push(w);
                } else if (sw == side[static_cast<std::size_t>(v)]) {
                    return {};
                }
            }
        }
    }
    return side;
}

}  // namespace cfe
