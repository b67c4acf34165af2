#include "cfe/decompose.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "cfe/error.hpp"

namespace cfe {
namespace {

// Repeatedly removes the vertex of smallest remaining degree (lowest id on
// ties) while `keep_going` accepts that degree.
template <typename Pred>
std::vector<Vertex> peel(const Graph& g, std::vector<char>& removed, Pred keep_going, std::size_t* max_seen) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> deg(n);
    std::set<std::pair<std::size_t, Vertex>> queue;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = g.degree(static_cast<Vertex>(v));
        queue.emplace(deg[v], static_cast<Vertex>(v));
    }
    removed.assign(n, 0);
    std::vector<Vertex> order;
    while (!queue.empty() && keep_going(queue.begin()->first)) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        if (max_seen) *max_seen = std::max(*max_seen, d);
        removed[static_cast<std::size_t>(v)] = 1;
        order.push_back(v);
        for (EdgeId e : g.incident(v)) {
            const Vertex w = g.edge(e).other(v);
            const auto wi = static_cast<std::size_t>(w);
            if (removed[wi]) continue;
            queue.erase({deg[wi], w});
            queue.emplace(--deg[wi], w);
        }
    }
    return order;
}

struct Circuit {
    std::vector<EdgeId> edges;  // local ids, in walking order
    std::vector<Vertex> tails;  // tail of each edge in walking order
};

// Euler circuits of a multigraph given by endpoint pairs; every vertex must have
// even degree. Circuits start at `first_start` when it has edges, then at the
// lowest vertex with unused edges.
std::vector<Circuit> euler_circuits(std::size_t n, const std::vector<Edge>& edges, Vertex first_start) {
    std::vector<std::vector<EdgeId>> inc(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        inc[static_cast<std::size_t>(edges[i].u)].push_back(static_cast<EdgeId>(i));
        inc[static_cast<std::size_t>(edges[i].v)].push_back(static_cast<EdgeId>(i));
    }
    std::vector<char> used(edges.size(), 0);
    std::vector<std::size_t> next(n, 0);

    auto has_unused = [&](Vertex v) {
        auto& p = next[static_cast<std::size_t>(v)];
        const auto& list = inc[static_cast<std::size_t>(v)];
        while (p < list.size() && used[static_cast<std::size_t>(list[p])]) ++p;
        return p < list.size();
    };

    std::vector<Circuit> out;
    auto walk_from = [&](Vertex start) {
        std::vector<std::pair<Vertex, EdgeId>> stack{{start, -1}};
        std::vector<EdgeId> popped;
        while (!stack.empty()) {
            const Vertex v = stack.back().first;
            if (has_unused(v)) {
                const EdgeId f = inc[static_cast<std::size_t>(v)][next[static_cast<std::size_t>(v)]];
                used[static_cast<std::size_t>(f)] = 1;
                stack.emplace_back(edges[static_cast<std::size_t>(f)].other(v), f);
            } else {
                if (stack.back().second != -1) popped.push_back(stack.back().second);
                stack.pop_back();
            }
        }
        Circuit c;
        c.edges.assign(popped.rbegin(), popped.rend());
        Vertex cur = start;
        for (EdgeId f : c.edges) {
            const Edge& ed = edges[static_cast<std::size_t>(f)];
            if (!ed.has(cur)) throw AlgorithmFailure("balanced_split", "Euler walk is not a trail");
            c.tails.push_back(cur);
            cur = ed.other(cur);
        }
        out.push_back(std::move(c));
    };

    if (first_start >= 0 && has_unused(first_start)) walk_from(first_start);
    for (std::size_t v = 0; v < n; ++v)
        if (has_unused(static_cast<Vertex>(v))) walk_from(static_cast<Vertex>(v));
    return out;
}

// Adds a dummy vertex n joined to every odd-degree vertex of the edge subset.
struct Augmented {
    std::vector<Edge> edges;  // real edges first, in the order of `ids`
    std::size_t real = 0;
    Vertex dummy = -1;
};

Augmented augment(const Graph& g, const std::vector<EdgeId>& ids) {
    Augmented a;
    const std::size_t n = g.vertex_count();
    std::vector<int> parity(n, 0);
    for (EdgeId e : ids) {
        a.edges.push_back(g.edge(e));
        parity[static_cast<std::size_t>(g.edge(e).u)] ^= 1;
        parity[static_cast<std::size_t>(g.edge(e).v)] ^= 1;
    }
    a.real = a.edges.size();
    a.dummy = static_cast<Vertex>(n);
    for (std::size_t v = 0; v < n; ++v)
        if (parity[v]) a.edges.push_back({static_cast<Vertex>(v), a.dummy});
    return a;
}

std::pair<std::vector<EdgeId>, std::vector<EdgeId>> halve(const Graph& g, const std::vector<EdgeId>& ids) {
    const Augmented a = augment(g, ids);
    std::pair<std::vector<EdgeId>, std::vector<EdgeId>> halves;
    for (const Circuit& c : euler_circuits(g.vertex_count() + 1, a.edges, a.dummy)) {
        for (std::size_t t = 0; t < c.edges.size(); ++t) {
            const auto local = static_cast<std::size_t>(c.edges[t]);
            if (local >= a.real) continue;
            (t % 2 == 0 ? halves.first : halves.second).push_back(ids[local]);
        }
    }
    std::sort(halves.first.begin(), halves.first.end());
    std::sort(halves.second.begin(), halves.second.end());
    return halves;
}

void split_power_of_two(const Graph& g, const std::vector<EdgeId>& ids, int k, std::vector<std::vector<EdgeId>>& out) {
    if (k == 1) {
        out.push_back(ids);
        return;
    }
    auto [a, b] = halve(g, ids);
    split_power_of_two(g, a, k / 2, out);
    split_power_of_two(g, b, k / 2, out);
}

// Proper edge colouring with k colours of a bipartite multigraph of maximum
// degree <= k, by alternating-path recolouring.
std::vector<int> bipartite_edge_colouring(std::size_t vertices, const std::vector<Edge>& edges, int k) {
    const auto kk = static_cast<std::size_t>(k);
    std::vector<EdgeId> at(vertices * kk, -1);
    std::vector<int> colour(edges.size(), -1);
    auto slot = [&](Vertex v, int c) -> EdgeId& { return at[static_cast<std::size_t>(v) * kk + static_cast<std::size_t>(c)]; };
    auto free_at = [&](Vertex v) {
        for (int c = 0; c < k; ++c)
            if (slot(v, c) == -1) return c;
        throw AlgorithmFailure("balanced_split", "vertex copy exceeds degree k");
    };

    std::vector<EdgeId> path;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [a, b] = edges[i];
        const int alpha = free_at(a);
        if (slot(b, alpha) != -1) {
            const int beta = free_at(b);
            path.clear();
            Vertex cur = b;
            int want = alpha;
            while (slot(cur, want) != -1) {
                const EdgeId f = slot(cur, want);
                path.push_back(f);
                cur = edges[static_cast<std::size_t>(f)].other(cur);
                want = want == alpha ? beta : alpha;
            }
            for (EdgeId f : path) {
                const Edge& ed = edges[static_cast<std::size_t>(f)];
                slot(ed.u, colour[static_cast<std::size_t>(f)]) = -1;
                slot(ed.v, colour[static_cast<std::size_t>(f)]) = -1;
            }
            for (EdgeId f : path) {
                auto& c = colour[static_cast<std::size_t>(f)];
                c = c == alpha ? beta : alpha;
                slot(edges[static_cast<std::size_t>(f)].u, c) = f;
                slot(edges[static_cast<std::size_t>(f)].v, c) = f;
            }
        }
        colour[i] = alpha;
        slot(a, alpha) = static_cast<EdgeId>(i);
        slot(b, alpha) = static_cast<EdgeId>(i);
    }
    return colour;
}

std::vector<std::vector<EdgeId>> split_by_orientation(const Graph& g, int k) {
    std::vector<EdgeId> ids(g.edge_count());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<EdgeId>(i);
    const Augmented a = augment(g, ids);

    std::vector<Vertex> tail(g.edge_count(), -1);
    for (const Circuit& c : euler_circuits(g.vertex_count() + 1, a.edges, a.dummy)) {
        for (std::size_t t = 0; t < c.edges.size(); ++t) {
            const auto local = static_cast<std::size_t>(c.edges[t]);
            if (local < a.real) tail[local] = c.tails[t];
        }
    }

    // Out-copies and in-copies of each vertex hold at most k edges each.
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> out_seen(n, 0), in_seen(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> copy_of(g.edge_count());
    std::vector<std::size_t> out_base(n + 1, 0), in_base(n + 1, 0);
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Vertex t = tail[e];
        const Vertex h = g.edge(static_cast<EdgeId>(e)).other(t);
        copy_of[e] = {out_seen[static_cast<std::size_t>(t)]++, in_seen[static_cast<std::size_t>(h)]++};
    }
    const auto kk = static_cast<std::size_t>(k);
    for (std::size_t v = 0; v < n; ++v) {
        out_base[v + 1] = out_base[v] + (out_seen[v] + kk - 1) / kk;
        in_base[v + 1] = in_base[v] + (in_seen[v] + kk - 1) / kk;
    }
    const std::size_t left = out_base[n];
    std::vector<Edge> bip(g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const Vertex t = tail[e];
        const Vertex h = g.edge(static_cast<EdgeId>(e)).other(t);
        bip[e] = {static_cast<Vertex>(out_base[static_cast<std::size_t>(t)] + copy_of[e].first / kk),
                  static_cast<Vertex>(left + in_base[static_cast<std::size_t>(h)] + copy_of[e].second / kk)};
    }
    const std::vector<int> colour = bipartite_edge_colouring(left + in_base[n], bip, k);

    std::vector<std::vector<EdgeId>> parts(kk);
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        parts[static_cast<std::size_t>(colour[e])].push_back(static_cast<EdgeId>(e));
    return parts;
}

}  // namespace

CoreSplit core_split(const Graph& g, std::size_t d) {
    std::vector<char> removed;
    CoreSplit split;
    split.removal_order = peel(g, removed, [d](std::size_t deg) { return deg < d; }, nullptr);
    split.h = EdgeSet(g.edge_count());
    split.d = EdgeSet(g.edge_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) split.core.push_back(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const Edge& e = g.edge(static_cast<EdgeId>(i));
        const bool inside = !removed[static_cast<std::size_t>(e.u)] && !removed[static_cast<std::size_t>(e.v)];
        (inside ? split.h : split.d).insert(static_cast<EdgeId>(i));
    }
#ifndef NDEBUG
    check_core_split(g, split, d);
#endif
    return split;
}

void check_core_split(const Graph& g, const CoreSplit& split, std::size_t d) {
    auto fail = [](const std::string& what) { throw AlgorithmFailure("core_split", what); };
    if (split.h.intersects(split.d) || (split.h | split.d).size() != g.edge_count())
        fail("H and D do not partition E");

    const std::size_t n = g.vertex_count();
    std::vector<char> in_core(n, 0);
    for (Vertex v : split.core) in_core[static_cast<std::size_t>(v)] = 1;
    std::vector<std::size_t> h_deg(n, 0);
    for (EdgeId e : split.h.ids()) {
        const Edge& ed = g.edge(e);
        if (!in_core[static_cast<std::size_t>(ed.u)] || !in_core[static_cast<std::size_t>(ed.v)])
            fail("H edge leaves the core");
        ++h_deg[static_cast<std::size_t>(ed.u)];
        ++h_deg[static_cast<std::size_t>(ed.v)];
    }
    for (Vertex v : split.core)
        if (h_deg[static_cast<std::size_t>(v)] < d) fail("core vertex " + std::to_string(v) + " has H-degree below d");
    for (EdgeId e : split.d.ids()) {
        const Edge& ed = g.edge(e);
        if (in_core[static_cast<std::size_t>(ed.u)] && in_core[static_cast<std::size_t>(ed.v)])
            fail("D edge has both endpoints in the core");
    }

    // Each peeled vertex has fewer than d D-neighbours among later-peeled or core vertices.
    std::vector<std::size_t> rank(n, split.removal_order.size());
    for (std::size_t i = 0; i < split.removal_order.size(); ++i)
        rank[static_cast<std::size_t>(split.removal_order[i])] = i;
    if (split.removal_order.size() + split.core.size() != n) fail("removal order and core do not cover V");
    for (std::size_t i = 0; i < split.removal_order.size(); ++i) {
        const Vertex v = split.removal_order[i];
        std::size_t later = 0;
        for (EdgeId e : g.incident(v))
            if (split.d.contains(e) && rank[static_cast<std::size_t>(g.edge(e).other(v))] > i) ++later;
        if (d > 0 && later > d - 1) fail("D is not (d-1)-degenerate at vertex " + std::to_string(v));
    }
}

std::vector<int> BalancedSplit::part_of() const {
    const std::size_t m = parts.empty() ? 0 : parts.front().universe();
    std::vector<int> out(m, -1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (EdgeId e : parts[i].ids()) out[static_cast<std::size_t>(e)] = static_cast<int>(i);
    return out;
}

BalancedSplit balanced_split(const Graph& g, int k) {
    if (k < 1) throw InputError("balanced_split needs k >= 1");
    std::vector<std::vector<EdgeId>> raw;
    if ((k & (k - 1)) == 0) {
        std::vector<EdgeId> ids(g.edge_count());
        for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<EdgeId>(i);
        split_power_of_two(g, ids, k, raw);
    } else {
        raw = split_by_orientation(g, k);
    }
    BalancedSplit split;
    for (const auto& ids : raw) split.parts.push_back(EdgeSet::from_ids(g.edge_count(), ids));
    check_balanced_split(g, split, k);
    return split;
}

void check_balanced_split(const Graph& g, const BalancedSplit& split, int k) {
    auto fail = [](const std::string& what) { throw AlgorithmFailure("balanced_split", what); };
    if (split.parts.size() != static_cast<std::size_t>(k)) fail("wrong number of parts");
    std::vector<int> owner(g.edge_count(), -1);
    for (std::size_t i = 0; i < split.parts.size(); ++i) {
        for (EdgeId e : split.parts[i].ids()) {
            if (owner[static_cast<std::size_t>(e)] != -1) fail("parts overlap");
            owner[static_cast<std::size_t>(e)] = static_cast<int>(i);
        }
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) fail("parts do not cover E");

    const auto kk = static_cast<long long>(k);
    std::vector<long long> count(static_cast<std::size_t>(k));
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::fill(count.begin(), count.end(), 0);
        for (EdgeId e : g.incident(static_cast<Vertex>(v))) ++count[static_cast<std::size_t>(owner[static_cast<std::size_t>(e)])];
        const auto d = static_cast<long long>(g.degree(static_cast<Vertex>(v)));
        for (long long c : count) {
            // d/k - 2 <= c <= d/k + 2, scaled by k.
            if (kk * c < d - 2 * kk || kk * c > d + 2 * kk)
                fail("vertex " + std::to_string(v) + " violates the +-2 degree bound");
        }
    }
}

DegeneracyOrder degeneracy_order(const Graph& g) {
    std::vector<char> removed;
    DegeneracyOrder out;
    out.order = peel(g, removed, [](std::size_t) { return true; }, &out.degeneracy);
    return out;
}

VertexColouring degeneracy_colouring(const Graph& g) {
    const DegeneracyOrder ord = degeneracy_order(g);
    const std::size_t n = g.vertex_count();
    VertexColouring c{std::vector<int>(n, -1), 0};
    std::vector<int> seen(ord.degeneracy + 2, -1);
    for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
        const Vertex v = *it;
        for (EdgeId e : g.incident(v)) {
            const int w = c.colour[static_cast<std::size_t>(g.edge(e).other(v))];
            if (w >= 0 && static_cast<std::size_t>(w) < seen.size()) seen[static_cast<std::size_t>(w)] = v;
        }
        int pick = 0;
        while (seen[static_cast<std::size_t>(pick)] == v) ++pick;
        c.colour[static_cast<std::size_t>(v)] = pick;
        c.count = std::max(c.count, pick + 1);
    }
    return c;
}

}  // namespace cfe
