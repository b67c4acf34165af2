#include "cfe/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "cfe/error.hpp"

namespace cfe {
namespace {

class IndexSearch {
public:
    IndexSearch(const Graph& g, Mode mode) : g_(g), mode_(mode), m_(g.edge_count()) {
        order_.resize(m_);
        std::iota(order_.begin(), order_.end(), 0);
        auto degree_sum = [&](EdgeId e) { return g.degree(g.edge(e).u) + g.degree(g.edge(e).v); };
        std::stable_sort(order_.begin(), order_.end(),
                         [&](EdgeId a, EdgeId b) { return degree_sum(a) > degree_sum(b); });

        std::vector<std::size_t> pos(m_);
        for (std::size_t p = 0; p < m_; ++p) pos[static_cast<std::size_t>(order_[p])] = p;

        closed_.resize(m_);
        complete_at_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const auto e = static_cast<EdgeId>(i);
            closed_[i] = edge_neighbourhood(g, e, NeighbourhoodMode::closed).ids();
            std::size_t last = 0;
            for (EdgeId f : closed_[i]) last = std::max(last, pos[static_cast<std::size_t>(f)]);
            complete_at_[last].push_back(e);
        }
        colour_.assign(m_, 0);
    }

    bool solve(int k) {
        k_ = k;
        counts_.assign(static_cast<std::size_t>(k) + 1, 0);
        return descend(0, 0);
    }

    const std::vector<int>& colours() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool descend(std::size_t p, int used) {
        if (p == m_) return true;
        const auto e = static_cast<std::size_t>(order_[p]);
        const int top = std::min(k_, used + 1);
        for (int c = 1; c <= top; ++c) {
            ++nodes_;
            colour_[e] = c;
            bool ok = true;
            for (EdgeId f : complete_at_[p]) {
                if (!edge_ok(f)) {
                    ok = false;
                    break;
                }
            }
            if (ok && descend(p + 1, std::max(used, c))) return true;
        }
        colour_[e] = 0;
        return false;
    }

    bool edge_ok(EdgeId e) {
        const auto& nb = closed_[static_cast<std::size_t>(e)];
        if (nb.size() == 1 && mode_ != Mode::closed) return true;
        for (EdgeId f : nb) ++counts_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(f)])];
        const int own = colour_[static_cast<std::size_t>(e)];
        bool ok = false;
        for (EdgeId f : nb) {
            const int c = colour_[static_cast<std::size_t>(f)];
            const int mult = counts_[static_cast<std::size_t>(c)];
            switch (mode_) {
                case Mode::closed: ok = mult == 1; break;
                case Mode::open: ok = f != e && mult - (c == own ? 1 : 0) == 1; break;
                case Mode::hybrid: ok = f != e && mult == 1; break;
            }
            if (ok) break;
        }
        for (EdgeId f : nb) --counts_[static_cast<std::size_t>(colour_[static_cast<std::size_t>(f)])];
        return ok;
    }

    const Graph& g_;
    Mode mode_;
    std::size_t m_;
    int k_ = 0;
    std::vector<EdgeId> order_;
    std::vector<std::vector<EdgeId>> closed_;
    std::vector<std::vector<EdgeId>> complete_at_;
    std::vector<int> colour_;
    std::vector<int> counts_;
    std::uint64_t nodes_ = 0;
};

class VertexSearch {
public:
    explicit VertexSearch(const Graph& g) : g_(g), n_(g.vertex_count()) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
        colour_.assign(n_, -1);
    }

    bool solve(int k) {
        k_ = k;
        return descend(0, 0);
    }

    const std::vector<int>& colours() const { return colour_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    bool descend(std::size_t p, int used) {
        if (p == n_) return true;
        const Vertex v = order_[p];
        const int top = std::min(k_, used + 1);
        for (int c = 0; c < top; ++c) {
            ++nodes_;
            bool clash = false;
            for (EdgeId e : g_.incident(v)) {
                if (colour_[static_cast<std::size_t>(g_.edge(e).other(v))] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            colour_[static_cast<std::size_t>(v)] = c;
            if (descend(p + 1, std::max(used, c + 1))) return true;
        }
        colour_[static_cast<std::size_t>(v)] = -1;
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    int k_ = 0;
    std::vector<Vertex> order_;
    std::vector<int> colour_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

ExactIndexResult exact_index(const Graph& g, Mode mode, std::size_t max_edges) {
    if (g.edge_count() > max_edges) {
        throw InstanceTooLarge("exact search refuses " + std::to_string(g.edge_count()) +
                               " edges (limit " + std::to_string(max_edges) + ")");
    }
    ExactIndexResult result;
    result.witness = PartialColouring(g.edge_count());
    if (g.edge_count() == 0) return result;

    IndexSearch search(g, mode);
    // A rainbow colouring satisfies every edge in every mode, so k = |E| succeeds.
    for (int k = 1; k <= static_cast<int>(g.edge_count()); ++k) {
        if (search.solve(k)) {
            result.value = k;
            for (std::size_t e = 0; e < g.edge_count(); ++e)
                result.witness.set(static_cast<EdgeId>(e), search.colours()[e]);
            break;
        }
    }
    result.nodes_explored = search.nodes();
    return result;
}

ExactChromaticResult exact_chromatic_number(const Graph& g, std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices) {
        throw InstanceTooLarge("exact colouring refuses " + std::to_string(g.vertex_count()) +
                               " vertices (limit " + std::to_string(max_vertices) + ")");
    }
    ExactChromaticResult result;
    if (g.vertex_count() == 0) return result;

    VertexSearch search(g);
    for (int k = 1; k <= static_cast<int>(g.vertex_count()); ++k) {
        if (search.solve(k)) {
            result.value = k;
            result.witness = {search.colours(), k};
            break;
        }
    }
    result.nodes_explored = search.nodes();
    return result;
}

}  // namespace cfe
