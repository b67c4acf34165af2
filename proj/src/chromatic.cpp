#include "cfe/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <string>

#include "cfe/bipartite.hpp"
#include "cfe/decompose.hpp"
#include "cfe/error.hpp"
#include "cfe/exact.hpp"
#include "cfe/verify.hpp"

namespace cfe {

int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : std::bit_width(x - 1); }

int chromatic_bound(int alpha) { return 3 * ceil_log2(static_cast<std::uint64_t>(std::max(alpha, 1))) + 16; }

namespace {

class HalvingSolver {
public:
    HalvingSolver(const Graph& g, std::vector<int> cls, Colour first)
        : g_(g), cls_(std::move(cls)), first_(first), out_(g.edge_count()), residue_(g.edge_count()) {}

    ChromaticCFResult run() {
        solve(EdgeSet::all(g_.edge_count()), 0);
        ChromaticCFResult r{std::move(out_), std::move(residue_), 0, depth_};
        r.palette_size = r.colouring.palette_size();
        return r;
    }

private:
    void solve(const EdgeSet& edges, int depth) {
        if (edges.empty()) return;
        const Subgraph sub = edge_subgraph(g_, edges);
        const Graph& h = sub.graph;
        const std::size_t n = h.vertex_count();

        std::map<int, std::size_t> class_size;
        for (std::size_t v = 0; v < n; ++v)
            if (h.degree(static_cast<Vertex>(v)) > 0) ++class_size[cls_[v]];
        const int levels = ceil_log2(class_size.size());
        if (levels == 0) throw AlgorithmFailure("cf_by_chromatic_partial", "edge inside a colour class");
        const std::size_t half = std::size_t{1} << (levels - 1);

        // Largest classes first, each to the lighter side that still has a free slot.
        std::vector<std::pair<std::size_t, int>> order;
        for (const auto& [c, size] : class_size) order.emplace_back(size, c);
        std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
        std::map<int, int> side_of_class;
        std::size_t vertices[2] = {0, 0}, slots[2] = {0, 0};
        for (const auto& [size, c] : order) {
            int s = vertices[0] <= vertices[1] ? 0 : 1;
            if (slots[s] == half) s ^= 1;
            side_of_class[c] = s;
            vertices[s] += size;
            ++slots[s];
        }

        std::vector<int> side(n, 0);
        for (std::size_t v = 0; v < n; ++v)
            if (h.degree(static_cast<Vertex>(v)) > 0) side[v] = side_of_class.at(cls_[v]);
        std::vector<std::size_t> cut_deg(n, 0);
        for (const Edge& e : h.edges())
            if (side[static_cast<std::size_t>(e.u)] != side[static_cast<std::size_t>(e.v)]) {
                ++cut_deg[static_cast<std::size_t>(e.u)];
                ++cut_deg[static_cast<std::size_t>(e.v)];
            }
        swap_loop(h, side, cut_deg);

        EdgeSet cut(g_.edge_count()), in_x(g_.edge_count()), in_y(g_.edge_count());
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            const Edge& e = h.edge(static_cast<EdgeId>(i));
            const EdgeId root = sub.parent_edge[i];
            const auto u = static_cast<std::size_t>(e.u), v = static_cast<std::size_t>(e.v);
            if (side[u] == side[v]) {
                (side[u] == 0 ? in_x : in_y).insert(root);
            } else if (cut_deg[u] == 1 && cut_deg[v] == 1) {
                if (h.degree(e.u) + h.degree(e.v) != 2)
                    throw AlgorithmFailure("cf_by_chromatic_partial", "isolated cut edge survived the swap loop");
                residue_.insert(root);
            } else {
                cut.insert(root);
            }
        }

        if (!cut.empty()) {
            const Subgraph cut_graph = edge_subgraph(g_, cut);
            const PartialColouring c = three_colour(cut_graph.graph, VertexPartition(side, 2), first_ + 3 * depth);
            out_.assign_from(c, cut_graph.parent_edge);
            depth_ = std::max(depth_, depth + 1);
        }
        solve(in_x, depth + 1);
        solve(in_y, depth + 1);
    }

    // Swap the classes of x and y while some isolated cut edge xy touches another edge.
    void swap_loop(const Graph& h, std::vector<int>& side, std::vector<std::size_t>& cut_deg) {
        auto flip = [&](Vertex w) {
            const auto wi = static_cast<std::size_t>(w);
            side[wi] ^= 1;
            for (EdgeId f : h.incident(w)) {
                const auto z = static_cast<std::size_t>(h.edge(f).other(w));
                if (side[z] == side[wi]) {
                    --cut_deg[z];
                } else {
                    ++cut_deg[z];
                }
            }
            cut_deg[wi] = h.degree(w) - cut_deg[wi];
        };

        std::deque<EdgeId> work;
        std::vector<char> queued(h.edge_count(), 1);
        for (std::size_t i = 0; i < h.edge_count(); ++i) work.push_back(static_cast<EdgeId>(i));
        auto enqueue = [&](Vertex v) {
            for (EdgeId f : h.incident(v))
                if (!queued[static_cast<std::size_t>(f)]) {
                    queued[static_cast<std::size_t>(f)] = 1;
                    work.push_back(f);
                }
        };

        std::size_t swaps = 0;
        while (!work.empty()) {
            const EdgeId e = work.front();
            work.pop_front();
            queued[static_cast<std::size_t>(e)] = 0;
            const Edge& ed = h.edge(e);
            const auto u = static_cast<std::size_t>(ed.u), v = static_cast<std::size_t>(ed.v);
            if (side[u] == side[v] || cut_deg[u] != 1 || cut_deg[v] != 1) continue;
            if (h.degree(ed.u) + h.degree(ed.v) <= 2) continue;
            if (++swaps > h.edge_count()) throw AlgorithmFailure("cf_by_chromatic_partial", "swap loop did not terminate");
            std::swap(cls_[u], cls_[v]);
            flip(ed.u);
            flip(ed.v);
            for (Vertex w : {ed.u, ed.v}) {
                enqueue(w);
                for (EdgeId f : h.incident(w)) enqueue(h.edge(f).other(w));
            }
        }
    }

    const Graph& g_;
    std::vector<int> cls_;
    Colour first_;
    PartialColouring out_;
    EdgeSet residue_;
    int depth_ = 0;
};

void require_proper(const Graph& g, const VertexColouring& vcol) {
    if (!is_proper(g, vcol)) throw PreconditionError("not_proper", "vertex colouring is not proper");
}

}  // namespace

ChromaticCFResult cf_by_chromatic_partial(const Graph& g, const VertexColouring& vcol, Colour first) {
    require_proper(g, vcol);
    ChromaticCFResult r = HalvingSolver(g, vcol.colour, first).run();

    const Verdict v = is_conflict_free(g, r.colouring, Mode::hybrid);
    for (EdgeId e : v.unsatisfied)
        if (!r.residue.contains(e))
            throw AlgorithmFailure("cf_by_chromatic_partial", "edge " + std::to_string(e) + " outside the residue is unsatisfied");
    if (!is_matching(g, r.residue)) throw AlgorithmFailure("cf_by_chromatic_partial", "residue is not a matching");
    const Colour limit = first + 3 * ceil_log2(static_cast<std::uint64_t>(std::max(vcol.count, 1)));
    if (r.colouring.coloured_count() > 0 && r.colouring.max_colour() >= limit)
        throw AlgorithmFailure("cf_by_chromatic_partial", "palette exceeds three colours per level");
    return r;
}

PartialColouring cf_by_chromatic(const Graph& g, const VertexColouring& vcol, Colour first) {
    require_proper(g, vcol);
    const EdgeSet isolated = isolated_edges(g);
    const EdgeSet forest = spanning_forest(g);
    const EdgeSet tree_part = forest - isolated;

    const Subgraph rest = edge_subgraph(g, EdgeSet::all(g.edge_count()) - forest);
    const ChromaticCFResult partial = cf_by_chromatic_partial(rest.graph, vcol, first);
    PartialColouring out(g.edge_count());
    out.assign_from(partial.colouring, rest.parent_edge);

    const EdgeSet residue = rest.lift(partial.residue, g.edge_count());
    if (!(tree_part | residue).empty()) {
        const Subgraph last = edge_subgraph(g, tree_part | residue);
        EdgeSet h_local(last.graph.edge_count()), m_local(last.graph.edge_count());
        for (std::size_t i = 0; i < last.graph.edge_count(); ++i)
            (tree_part.contains(last.parent_edge[i]) ? h_local : m_local).insert(static_cast<EdgeId>(i));
        const Colour offset = first + 3 * ceil_log2(static_cast<std::uint64_t>(std::max(vcol.count, 1)));
        out.assign_from(sixteen_colour(last.graph, h_local, m_local, offset), last.parent_edge);
    }

    const Verdict v = is_conflict_free(g, out, Mode::hybrid);
    for (EdgeId e : v.unsatisfied)
        if (!isolated.contains(e)) throw AlgorithmFailure("cf_by_chromatic", "non-isolated edge " + std::to_string(e) + " is unsatisfied");
    return out;
}

PartialColouring cf_total_by_chromatic(const Graph& g, const VertexColouring& vcol, Colour first) {
    PartialColouring out = cf_by_chromatic(g, vcol, first);
    const Colour fill = first + chromatic_bound(vcol.count);
    for (std::size_t i = 0; i < out.size(); ++i)
        if (!out.is_coloured(static_cast<EdgeId>(i))) out.set(static_cast<EdgeId>(i), fill);
    if (!is_conflict_free(g, out, Mode::hybrid).conflict_free)
        throw AlgorithmFailure("cf_total_by_chromatic", "total colouring is not conflict-free");
    return out;
}

VertexColouring default_vertex_colouring(const Graph& g, bool exact) {
    if (exact) return exact_chromatic_number(g).witness;
    return degeneracy_colouring(g);
}

}  // namespace cfe
