#include "cfe/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "cfe/error.hpp"
#include "cfe/verify.hpp"

namespace cfe {
namespace {

constexpr int kX = 0;
constexpr int kY = 1;

void require_bipartition(const Graph& g, const VertexPartition& part) {
    if (part.block_count() != 2 || part.universe() != g.vertex_count())
        throw PreconditionError("not_bipartite", "expected a two-block partition of all vertices");
    for (const Edge& e : g.edges())
        if (part.block_of(e.u) == part.block_of(e.v))
            throw PreconditionError("not_bipartite", "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                                                         " lies inside one side");
}

struct Components {
    std::vector<int> label;  // per vertex, -1 for isolated vertices
    std::vector<std::vector<EdgeId>> edges;
};

Components edge_components(const Graph& g, const std::vector<char>& active) {
    Components c;
    c.label.assign(g.vertex_count(), -1);
    std::vector<Vertex> stack;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!active[i] || c.label[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(i)).u)] != -1) continue;
        const int id = static_cast<int>(c.edges.size());
        c.edges.emplace_back();
        stack.push_back(g.edge(static_cast<EdgeId>(i)).u);
        c.label[static_cast<std::size_t>(stack.back())] = id;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (EdgeId e : g.incident(v)) {
                if (!active[static_cast<std::size_t>(e)]) continue;
                const Vertex w = g.edge(e).other(v);
                if (c.label[static_cast<std::size_t>(w)] == -1) {
                    c.label[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
                if (v < w) c.edges[static_cast<std::size_t>(id)].push_back(e);
            }
        }
        std::sort(c.edges.back().begin(), c.edges.back().end());
    }
    return c;
}

// The Y vertex carrying every edge of the component, if there is one.
std::optional<Vertex> y_centre(const Graph& g, const VertexPartition& part, const std::vector<EdgeId>& comp) {
    if (comp.size() < 2) return std::nullopt;
    const Edge& first = g.edge(comp.front());
    for (Vertex c : {first.u, first.v}) {
        if (part.block_of(c) != kY) continue;
        if (std::all_of(comp.begin(), comp.end(), [&](EdgeId e) { return g.edge(e).has(c); })) return c;
    }
    return std::nullopt;
}

// The three reduction rules applied to the active edges until none applies.
class CoverReducer {
public:
    CoverReducer(const Graph& g, const VertexPartition& part, std::vector<char> active)
        : g_(g), part_(part), active_(std::move(active)) {
        const std::size_t n = g.vertex_count();
        hdeg_.assign(n, 0);
        single_.assign(n, 0);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (!active_[i]) continue;
            ++hdeg_[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(i)).u)];
            ++hdeg_[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(i)).v)];
        }
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (!active_[i]) continue;
            const Vertex x = x_end(static_cast<EdgeId>(i));
            if (hdeg_[static_cast<std::size_t>(y_end(static_cast<EdgeId>(i)))] == 1) ++single_[static_cast<std::size_t>(x)];
        }
        for (std::size_t v = 0; v < n; ++v)
            if (part.block_of(static_cast<Vertex>(v)) == kX) refresh(static_cast<Vertex>(v));
    }

    std::vector<char> run() {
        while (true) {
            if (!leaf_.empty()) {
                remove_vertex(*leaf_.begin());
            } else if (!all_multi_.empty()) {
                remove_vertex(*all_multi_.begin());
            } else if (!prunable_.empty()) {
                const Vertex x = *prunable_.begin();
                for (EdgeId e : g_.incident(x)) {
                    if (active_[static_cast<std::size_t>(e)] && hdeg_[static_cast<std::size_t>(g_.edge(e).other(x))] >= 2) {
                        remove_edge(e);
                        break;
                    }
                }
            } else {
                return active_;
            }
        }
    }

private:
    Vertex x_end(EdgeId e) const {
        const Edge& ed = g_.edge(e);
        return part_.block_of(ed.u) == kX ? ed.u : ed.v;
    }
    Vertex y_end(EdgeId e) const { return g_.edge(e).other(x_end(e)); }

    void refresh(Vertex x) {
        const auto xi = static_cast<std::size_t>(x);
        leaf_.erase(x);
        all_multi_.erase(x);
        prunable_.erase(x);
        const std::size_t d = hdeg_[xi];
        if (d == 0) return;
        if (d == 1) leaf_.insert(x);
        if (single_[xi] == 0) all_multi_.insert(x);
        if (d >= 3 && single_[xi] < d) prunable_.insert(x);
    }

    void remove_vertex(Vertex x) {
        for (EdgeId e : g_.incident(x))
            if (active_[static_cast<std::size_t>(e)]) remove_edge(e);
    }

    void remove_edge(EdgeId e) {
        const Vertex x = x_end(e);
        const Vertex y = y_end(e);
        const auto xi = static_cast<std::size_t>(x);
        const auto yi = static_cast<std::size_t>(y);
        active_[static_cast<std::size_t>(e)] = 0;
        if (hdeg_[yi] == 1) --single_[xi];
        --hdeg_[xi];
        --hdeg_[yi];
        if (hdeg_[yi] == 1) {
            for (EdgeId f : g_.incident(y)) {
                if (!active_[static_cast<std::size_t>(f)]) continue;
                const Vertex other = g_.edge(f).other(y);
                ++single_[static_cast<std::size_t>(other)];
                refresh(other);
            }
        }
        refresh(x);
    }

    const Graph& g_;
    const VertexPartition& part_;
    std::vector<char> active_;
    std::vector<std::size_t> hdeg_;
    std::vector<std::size_t> single_;  // H-neighbours of an X vertex that are covered exactly once
    std::set<Vertex> leaf_, all_multi_, prunable_;
};

StarCover classify(const Graph& g, const VertexPartition& part, const std::vector<char>& active) {
    StarCover cover;
    cover.h = EdgeSet(g.edge_count());
    std::vector<std::size_t> hdeg(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        if (!active[i]) continue;
        cover.h.insert(static_cast<EdgeId>(i));
        ++hdeg[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(i)).u)];
        ++hdeg[static_cast<std::size_t>(g.edge(static_cast<EdgeId>(i)).v)];
    }
    const Components comps = edge_components(g, active);
    for (const auto& edges : comps.edges) {
        StarComponent c{StarKind::star_at_x, -1, edges};
        for (EdgeId e : edges) {
            for (Vertex v : {g.edge(e).u, g.edge(e).v}) {
                if (part.block_of(v) == kY && hdeg[static_cast<std::size_t>(v)] >= 2) {
                    c.kind = StarKind::subdivided_star_at_y;
                    c.centre = v;
                }
            }
        }
        if (c.kind == StarKind::star_at_x) {
            const Edge& first = g.edge(edges.front());
            c.centre = part.block_of(first.u) == kX ? first.u : first.v;
        }
        cover.components.push_back(std::move(c));
    }
    return cover;
}

void colour_star(const Graph& g, const std::vector<EdgeId>& edges, Vertex centre, PartialColouring& out, Colour first) {
    int rank = 0;
    for (EdgeId e : edges) {
        if (!g.edge(e).has(centre)) continue;
        out.set(e, first + std::min(rank, 2));
        ++rank;
    }
}

std::vector<char> mask_of(const Graph& g, const std::vector<std::vector<EdgeId>>& comps) {
    std::vector<char> active(g.edge_count(), 0);
    for (const auto& c : comps)
        for (EdgeId e : c) active[static_cast<std::size_t>(e)] = 1;
    return active;
}

void audit(const Graph& g, const PartialColouring& c, const char* phase) {
    const Verdict v = is_conflict_free(g, c, Mode::hybrid);
    if (!v.conflict_free)
        throw AlgorithmFailure(phase, "edge " + std::to_string(v.unsatisfied.front()) + " left unsatisfied");
}

void audit_saturated(const Graph& g, const VertexPartition& part, const PartialColouring& c, bool all_of_x, const char* phase) {
    for (std::size_t i = 0; i < g.vertex_count(); ++i) {
        const auto v = static_cast<Vertex>(i);
        if (g.degree(v) == 0 || incident_unique(g, c, v)) continue;
        const auto inc = g.incident(v);
        const bool touched = std::any_of(inc.begin(), inc.end(), [&](EdgeId e) { return c.is_coloured(e); });
        if (part.block_of(v) == kY || all_of_x || touched)
            throw AlgorithmFailure(phase, "vertex " + std::to_string(v) + " has no uniquely coloured edge");
    }
}

}  // namespace

StarCover star_cover(const Graph& g, const VertexPartition& part) {
    require_bipartition(g, part);
    if (g.edge_count() < 2) throw PreconditionError("trivial", "need at least two edges");
    const Components comps = edge_components(g, std::vector<char>(g.edge_count(), 1));
    if (comps.edges.size() != 1) throw PreconditionError("disconnected", "edges form " + std::to_string(comps.edges.size()) + " components");
    if (y_centre(g, part, comps.edges.front())) throw PreconditionError("star_at_y", "graph is a star centred in Y");

    const StarCover cover = classify(g, part, CoverReducer(g, part, std::vector<char>(g.edge_count(), 1)).run());
    check_star_cover(g, part, cover);
    return cover;
}

void check_star_cover(const Graph& g, const VertexPartition& part, const StarCover& cover) {
    auto fail = [](const std::string& what) { throw AlgorithmFailure("star_cover", what); };
    std::vector<std::size_t> hdeg(g.vertex_count(), 0);
    for (EdgeId e : cover.h.ids()) {
        ++hdeg[static_cast<std::size_t>(g.edge(e).u)];
        ++hdeg[static_cast<std::size_t>(g.edge(e).v)];
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (part.block_of(static_cast<Vertex>(v)) == kY && g.degree(static_cast<Vertex>(v)) > 0 && hdeg[v] == 0)
            fail("Y vertex " + std::to_string(v) + " is not covered");

    for (const StarComponent& c : cover.components) {
        const auto centre_deg = hdeg[static_cast<std::size_t>(c.centre)];
        if (c.kind == StarKind::star_at_x) {
            const bool ok = part.block_of(c.centre) == kX && c.edges.size() >= 2 && centre_deg == c.edges.size() &&
                            std::all_of(c.edges.begin(), c.edges.end(), [&](EdgeId e) {
                                return hdeg[static_cast<std::size_t>(g.edge(e).other(c.centre))] == 1;
                            });
            if (!ok) fail("component at " + std::to_string(c.centre) + " is not a star centred in X");
        } else {
            // Legs y-x-leaf: each x has H-degree 2, each leaf H-degree 1.
            bool ok = part.block_of(c.centre) == kY && centre_deg >= 2 && c.edges.size() == 2 * centre_deg;
            for (EdgeId e : c.edges) {
                const Edge& ed = g.edge(e);
                const Vertex x = part.block_of(ed.u) == kX ? ed.u : ed.v;
                const Vertex y = ed.other(x);
                ok = ok && hdeg[static_cast<std::size_t>(x)] == 2 && (y == c.centre || hdeg[static_cast<std::size_t>(y)] == 1);
            }
            if (!ok) fail("component at " + std::to_string(c.centre) + " is not a subdivided star centred in Y");
        }
    }
}

PartialColouring three_colour(const Graph& g, const VertexPartition& part, Colour first) {
    require_bipartition(g, part);
    const Components comps = edge_components(g, std::vector<char>(g.edge_count(), 1));
    std::vector<std::vector<EdgeId>> general;
    PartialColouring out(g.edge_count());
    for (const auto& edges : comps.edges) {
        if (edges.size() == 1) throw PreconditionError("trivial", "edge " + std::to_string(edges.front()) + " forms its own component");
        if (const auto y = y_centre(g, part, edges)) {
            colour_star(g, edges, *y, out, first);
        } else {
            general.push_back(edges);
        }
    }
    const StarCover cover = classify(g, part, CoverReducer(g, part, mask_of(g, general)).run());
    for (const StarComponent& c : cover.components) {
        if (c.kind == StarKind::star_at_x) {
            colour_star(g, c.edges, c.centre, out, first);
            continue;
        }
        bool centre_done = false;
        for (EdgeId e : c.edges) {
            if (!g.edge(e).has(c.centre)) {
                out.set(e, first);
            } else {
                out.set(e, centre_done ? first + 1 : first + 2);
                centre_done = true;
            }
        }
    }
    audit(g, out, "three_colour");
    audit_saturated(g, part, out, false, "three_colour");
    return out;
}

PartialColouring four_colour_saturating(const Graph& g, const VertexPartition& part, Colour first) {
    PartialColouring out = three_colour(g, part, first);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto x = static_cast<Vertex>(v);
        if (part.block_of(x) != kX || g.degree(x) == 0) continue;
        const auto inc = g.incident(x);
        if (std::none_of(inc.begin(), inc.end(), [&](EdgeId e) { return out.is_coloured(e); })) out.set(inc.front(), first + 3);
    }
    audit(g, out, "four_colour");
    audit_saturated(g, part, out, true, "four_colour");
    return out;
}

namespace {

// Union-find tracking the parity of each vertex relative to its root.
class ParityForest {
public:
    explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::pair<std::size_t, int> find(std::size_t v) {
        int p = 0;
        std::size_t r = v;
        while (parent_[r] != r) {
            p ^= parity_[r];
            r = parent_[r];
        }
        // Path compression with parity fix-up.
        std::size_t cur = v;
        int acc = p;
        while (parent_[cur] != cur) {
            const std::size_t next = parent_[cur];
            const int here = parity_[cur];
            parent_[cur] = r;
            parity_[cur] = acc;
            acc ^= here;
            cur = next;
        }
        return {r, p};
    }

    /// Joins u and v on opposite sides; false if they already share a side.
    bool join_opposite(std::size_t u, std::size_t v) {
        const auto [ru, pu] = find(u);
        const auto [rv, pv] = find(v);
        if (ru == rv) return pu != pv;
        parent_[rv] = ru;
        parity_[rv] = pu ^ pv ^ 1;
        return true;
    }

private:
    std::vector<std::size_t> parent_;
    std::vector<int> parity_;
};

}  // namespace

PartialColouring sixteen_colour(const Graph& g, const EdgeSet& h_prime, const EdgeSet& m_prime, Colour first) {
    const std::size_t m = g.edge_count();
    if (h_prime.universe() != m || m_prime.universe() != m) throw InputError("edge sets do not match the graph");
    if (h_prime.intersects(m_prime) || h_prime.size() + m_prime.size() != m)
        throw PreconditionError("not_decomposition", "H' and M' must partition the edges");
    if (!is_matching(g, m_prime)) throw PreconditionError("not_matching", "M' is not a matching");

    const std::size_t n = g.vertex_count();
    ParityForest forest(n);
    std::vector<std::size_t> hdeg(n, 0);
    for (EdgeId e : h_prime.ids()) {
        const Edge& ed = g.edge(e);
        if (!forest.join_opposite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v)))
            throw PreconditionError("not_bipartite", "H' contains an odd cycle");
        ++hdeg[static_cast<std::size_t>(ed.u)];
        ++hdeg[static_cast<std::size_t>(ed.v)];
    }
    for (EdgeId e : h_prime.ids())
        if (hdeg[static_cast<std::size_t>(g.edge(e).u)] == 1 && hdeg[static_cast<std::size_t>(g.edge(e).v)] == 1)
            throw PreconditionError("trivial", "H' has a single-edge component at edge " + std::to_string(e));
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(static_cast<Vertex>(v)) > 0 && hdeg[v] == 0)
            throw PreconditionError("not_spanning", "vertex " + std::to_string(v) + " is not covered by H'");

    // Grow H' to a maximal bipartite H; what is left over stays inside one side.
    EdgeSet f = h_prime;
    std::vector<EdgeId> leftover;
    for (EdgeId e : m_prime.ids()) {
        const Edge& ed = g.edge(e);
        if (forest.join_opposite(static_cast<std::size_t>(ed.u), static_cast<std::size_t>(ed.v))) {
            f.insert(e);
        } else {
            leftover.push_back(e);
        }
    }
    std::vector<int> side(n);
    for (std::size_t v = 0; v < n; ++v) side[v] = forest.find(v).second;
    for (EdgeId e : leftover)
        if (side[static_cast<std::size_t>(g.edge(e).u)] != side[static_cast<std::size_t>(g.edge(e).v)])
            throw AlgorithmFailure("sixteen_colour", "an X-Y edge remained outside the bipartite part");

    const Subgraph h = edge_subgraph(g, f);
    const VertexPartition part(side, 2);
    const PartialColouring c = four_colour_saturating(h.graph, part, 1);

    std::vector<int> omega(n, 0);
    for (EdgeId e : leftover) omega[static_cast<std::size_t>(g.edge(e).v)] = 1;

    PartialColouring out(m);
    for (std::size_t i = 0; i < h.graph.edge_count(); ++i) {
        const auto local = static_cast<EdgeId>(i);
        if (!c.is_coloured(local)) continue;
        const Edge& ed = h.graph.edge(local);
        const Vertex x = side[static_cast<std::size_t>(ed.u)] == kX ? ed.u : ed.v;
        const Vertex y = ed.other(x);
        const Colour code = (c.raw(local) - 1) * 4 + omega[static_cast<std::size_t>(x)] * 2 + omega[static_cast<std::size_t>(y)];
        out.set(h.parent_edge[i], first + code);
    }
    audit(g, out, "sixteen_colour");
    return out;
}

}  // namespace cfe
