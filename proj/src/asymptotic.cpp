#include "cfe/asymptotic.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "cfe/bipartite.hpp"
#include "cfe/chromatic.hpp"
#include "cfe/error.hpp"
#include "cfe/rng.hpp"
#include "cfe/verify.hpp"

namespace cfe {
namespace {

constexpr double kTolerance = 1e-9;

int ceil_log2_real(double x) { return x <= 1.0 ? 0 : static_cast<int>(std::ceil(std::log2(x) - kTolerance)); }

std::vector<std::size_t> degrees_in(const Graph& g, const EdgeSet& edges) {
    std::vector<std::size_t> deg(g.vertex_count(), 0);
    for (EdgeId e : edges.ids()) {
        ++deg[static_cast<std::size_t>(g.edge(e).u)];
        ++deg[static_cast<std::size_t>(g.edge(e).v)];
    }
    return deg;
}

std::string vertex_name(Vertex v) { return std::to_string(v); }

}  // namespace

Params plan(std::size_t delta, double eps) {
    if (delta < 2) throw InputError("maximum degree must be at least 2, got " + std::to_string(delta));
    if (!(eps > 0.0)) throw InputError("eps must be positive");
    Params p;
    p.eps = eps;
    p.delta = delta;
    p.log2_delta = std::log2(static_cast<double>(delta));
    p.d = static_cast<std::size_t>(std::floor(10.0 * p.log2_delta * p.log2_delta * p.log2_delta + kTolerance));
    p.k = static_cast<int>(std::ceil(5.0 / eps - kTolerance));
    p.s = static_cast<int>(std::ceil(p.log2_delta / p.k - kTolerance));
    p.k = std::max(p.k, 1);
    p.s = std::max(p.s, 1);
    return p;
}

std::size_t explicit_bound(const Params& p) {
    const int sk = p.s * p.k + 4 * p.s;
    const int r_prime = 3 * ceil_log2_real(2.0 * p.log2_delta + 1.0) + 16;
    const int d_part = 3 * ceil_log2(p.d) + 16;
    return static_cast<std::size_t>(sk + r_prime + d_part + 16 + 1);
}

// ---------------------------------------------------------------------------
// Initial decomposition

InitialSplit initial_split(const Graph& g, const Params& p) {
    if (p.d < 10) throw InputError("core threshold must be at least 10");
    if (!isolated_edges(g).empty()) throw PreconditionError("isolated_edges", "remove isolated edges first");

    const CoreSplit core = core_split(g, p.d);
    InitialSplit out;
    out.core_vertices = core.core;
    out.core_empty = core.h.empty();
    EdgeSet f_prime(g.edge_count());
    if (!core.h.empty()) {
        const Subgraph h_prime = edge_subgraph(g, core.h);
        const BalancedSplit thirds = balanced_split(h_prime.graph, 3);
        const Subgraph third = edge_subgraph(h_prime.graph, thirds.parts[2]);
        const EdgeSet forest_local = third.lift(spanning_forest(third.graph), h_prime.graph.edge_count());
        f_prime = h_prime.lift(forest_local, g.edge_count());
    }
    out.h = core.h - f_prime;

    const Subgraph d_prime = edge_subgraph(g, core.d);
    const EdgeSet j = d_prime.lift(isolated_edges(d_prime.graph), g.edge_count());
    out.f = f_prime | j;
    out.d = core.d - j;

    const auto deg_h = degrees_in(g, out.h);
    for (Vertex v : out.core_vertices)
        if (static_cast<double>(deg_h[static_cast<std::size_t>(v)]) < 0.65 * static_cast<double>(p.d)) out.min_degree_ok = false;
    return out;
}

void check_initial_split(const Graph& g, const InitialSplit& split, const Params& p) {
    auto fail = [](const std::string& what) { throw AlgorithmFailure("initial_split", what); };
    if (split.h.intersects(split.d) || split.h.intersects(split.f) || split.d.intersects(split.f) ||
        split.h.size() + split.d.size() + split.f.size() != g.edge_count())
        fail("H, D and F do not partition the edges");

    if (!split.d.empty()) {
        const Subgraph d = edge_subgraph(g, split.d);
        if (!isolated_edges(d.graph).empty()) fail("D has a trivial component");
        if (degeneracy_order(d.graph).degeneracy + 1 > p.d) fail("D is not (d-1)-degenerate");
    }

    if (!is_forest(g, split.f)) fail("F has a cycle");
    const Subgraph f = edge_subgraph(g, split.f);
    if (!isolated_edges(f.graph).empty()) fail("F has a trivial component");
    std::vector<char> in_core(g.vertex_count(), 0);
    for (Vertex v : split.core_vertices) {
        in_core[static_cast<std::size_t>(v)] = 1;
        if (f.graph.degree(v) == 0) fail("core vertex " + vertex_name(v) + " is not covered by F");
    }
    for (EdgeId e : split.h.ids())
        if (!in_core[static_cast<std::size_t>(g.edge(e).u)] || !in_core[static_cast<std::size_t>(g.edge(e).v)])
            fail("H edge " + std::to_string(e) + " leaves the core");
}

// ---------------------------------------------------------------------------
// Random partitions

bool PartitionFamily::always_bad(Vertex u, Vertex v) const {
    for (int i = 0; i < s; ++i) {
        if (z_of(u) == i || z_of(v) == i) continue;
        for (int j = 0; j < k; ++j)
            if (x_of(u, i, j) != x_of(v, i, j)) return false;
    }
    return true;
}

namespace {

class Sampler {
public:
    Sampler(const Graph& h, const BalancedSplit& parts, const Params& p, std::uint64_t seed, const SamplerOptions& options)
        : h_(h), part_of_(parts.part_of()), s_(p.s), k_(p.k), l_(p.log2_delta), seed_(seed), options_(options) {
        if (static_cast<int>(parts.parts.size()) != s_) throw InputError("expected one part per index i");
        const std::size_t n = h.vertex_count();
        family_.s = s_;
        family_.k = k_;
        family_.z.assign(n, 0);
        family_.x.assign(n * static_cast<std::size_t>(s_ * k_), 1);
        n_.assign(n * static_cast<std::size_t>(s_), 0);
        b_.assign(n, 0);
        bad_.assign(h.edge_count(), 0);
    }

    PartitionFamily run() {
        precheck();
        const std::uint64_t budget = options_.budget.value_or(
            std::max<std::uint64_t>(10'000, 200 * static_cast<std::uint64_t>(h_.vertex_count()) * static_cast<std::uint64_t>(s_ + 1)));
        std::uint64_t total = 0;
        for (int r = 0; r < options_.restarts; ++r) {
            Rng rng(Rng::derive(seed_, static_cast<std::uint64_t>(r)));
            initialise(rng);
            std::uint64_t used = 0;
            while (!violated_.empty() && used < budget) {
                resample(*violated_.begin(), rng);
                ++used;
            }
            total += used;
            if (violated_.empty()) {
                family_.resamples = total;
                family_.restart = r;
                return family_;
            }
        }
        throw AlgorithmFailure("sample_partitions", describe(*violated_.begin()) + " still holds after " +
                                                        std::to_string(options_.restarts) + " restarts");
    }

private:
    std::size_t n_index(Vertex v, int i) const { return static_cast<std::size_t>(v) * static_cast<std::size_t>(s_) + static_cast<std::size_t>(i); }
    std::uint64_t q_id(Vertex v, int i) const { return static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(s_ + 1) + static_cast<std::uint64_t>(i); }
    std::uint64_t a_id(Vertex v) const { return q_id(v, s_); }

    std::string describe(std::uint64_t id) const {
        const auto v = static_cast<Vertex>(id / static_cast<std::uint64_t>(s_ + 1));
        const auto i = static_cast<int>(id % static_cast<std::uint64_t>(s_ + 1));
        if (i == s_) return "event A(v=" + vertex_name(v) + ")";
        return "event Q(v=" + vertex_name(v) + ", i=" + std::to_string(i) + ")";
    }

    void precheck() const {
        if (l_ <= 1.0) throw PreconditionError("infeasible", "log2 of the maximum degree must exceed 1");
        std::vector<std::size_t> per_part(h_.vertex_count() * static_cast<std::size_t>(s_), 0);
        for (std::size_t e = 0; e < h_.edge_count(); ++e) {
            const Edge& ed = h_.edge(static_cast<EdgeId>(e));
            ++per_part[n_index(ed.u, part_of_[e])];
            ++per_part[n_index(ed.v, part_of_[e])];
        }
        for (std::size_t v = 0; v < h_.vertex_count(); ++v) {
            const auto vv = static_cast<Vertex>(v);
            if (h_.degree(vv) == 0) continue;
            if (s_ == 1 && static_cast<double>(h_.degree(vv)) > 2 * l_)
                throw PreconditionError("infeasible", "with one part every edge is always bad; vertex " + vertex_name(vv) +
                                                          " has degree above 2 log2 Delta");
            for (int i = 0; i < s_; ++i)
                if (static_cast<double>(per_part[n_index(vv, i)]) < l_)
                    throw PreconditionError("infeasible", "vertex " + vertex_name(vv) + " has " +
                                                              std::to_string(per_part[n_index(vv, i)]) + " edges in part " +
                                                              std::to_string(i) + ", below log2 Delta");
        }
    }

    bool edge_bad(EdgeId e) const { return family_.always_bad(h_.edge(e).u, h_.edge(e).v); }

    void check_q(Vertex v, int i) {
        if (static_cast<double>(n_[n_index(v, i)]) < l_) {
            violated_.insert(q_id(v, i));
        } else {
            violated_.erase(q_id(v, i));
        }
    }

    void check_a(Vertex v) {
        if (static_cast<double>(b_[static_cast<std::size_t>(v)]) > 2 * l_) {
            violated_.insert(a_id(v));
        } else {
            violated_.erase(a_id(v));
        }
    }

    void draw(Vertex v, Rng& rng, bool with_x) {
        family_.z[static_cast<std::size_t>(v)] = static_cast<int>(rng.below(static_cast<std::uint64_t>(s_)));
        if (!with_x) return;
        const std::size_t base = static_cast<std::size_t>(v) * static_cast<std::size_t>(s_ * k_);
        for (std::size_t t = 0; t < static_cast<std::size_t>(s_ * k_); ++t) family_.x[base + t] = rng.coin() ? 2 : 1;
    }

    void initialise(Rng& rng) {
        const std::size_t n = h_.vertex_count();
        for (std::size_t v = 0; v < n; ++v)
            if (h_.degree(static_cast<Vertex>(v)) > 0) draw(static_cast<Vertex>(v), rng, true);
        std::fill(n_.begin(), n_.end(), 0);
        std::fill(b_.begin(), b_.end(), 0);
        violated_.clear();
        for (std::size_t e = 0; e < h_.edge_count(); ++e) {
            const Edge& ed = h_.edge(static_cast<EdgeId>(e));
            const int i = part_of_[e];
            if (family_.z_of(ed.v) == i) ++n_[n_index(ed.u, i)];
            if (family_.z_of(ed.u) == i) ++n_[n_index(ed.v, i)];
            bad_[e] = edge_bad(static_cast<EdgeId>(e));
            if (bad_[e]) {
                ++b_[static_cast<std::size_t>(ed.u)];
                ++b_[static_cast<std::size_t>(ed.v)];
            }
        }
        for (std::size_t v = 0; v < n; ++v) {
            const auto vv = static_cast<Vertex>(v);
            if (h_.degree(vv) == 0) continue;
            for (int i = 0; i < s_; ++i) check_q(vv, i);
            check_a(vv);
        }
    }

    void redraw(Vertex v, Rng& rng, bool with_x) {
        const int old_z = family_.z_of(v);
        draw(v, rng, with_x);
        const int new_z = family_.z_of(v);
        for (EdgeId e : h_.incident(v)) {
            const Vertex w = h_.edge(e).other(v);
            const int i = part_of_[static_cast<std::size_t>(e)];
            if (old_z != new_z && (i == old_z || i == new_z)) {
                n_[n_index(w, i)] += i == new_z ? 1 : -1;
                check_q(w, i);
            }
            const bool now_bad = edge_bad(e);
            if (now_bad != static_cast<bool>(bad_[static_cast<std::size_t>(e)])) {
                bad_[static_cast<std::size_t>(e)] = now_bad;
                const int delta = now_bad ? 1 : -1;
                b_[static_cast<std::size_t>(v)] += delta;
                b_[static_cast<std::size_t>(w)] += delta;
                check_a(w);
            }
        }
        check_a(v);
    }

    void resample(std::uint64_t id, Rng& rng) {
        const auto v = static_cast<Vertex>(id / static_cast<std::uint64_t>(s_ + 1));
        const auto i = static_cast<int>(id % static_cast<std::uint64_t>(s_ + 1));
        const bool is_a = i == s_;
        std::vector<Vertex> scope{v};
        for (EdgeId e : h_.incident(v))
            if (is_a || part_of_[static_cast<std::size_t>(e)] == i) scope.push_back(h_.edge(e).other(v));
        std::sort(scope.begin(), scope.end());
        scope.erase(std::unique(scope.begin(), scope.end()), scope.end());
        for (Vertex u : scope) redraw(u, rng, is_a);
    }

    const Graph& h_;
    std::vector<int> part_of_;
    int s_, k_;
    double l_;
    std::uint64_t seed_;
    SamplerOptions options_;
    PartitionFamily family_;
    std::vector<long> n_;  ///< N_{v,i}
    std::vector<long> b_;  ///< B_v
    std::vector<char> bad_;
    std::set<std::uint64_t> violated_;
};

}  // namespace

PartitionFamily sample_partitions(const Graph& h, const BalancedSplit& parts, const Params& p, std::uint64_t seed,
                                  const SamplerOptions& options) {
    return Sampler(h, parts, p, seed, options).run();
}

// ---------------------------------------------------------------------------
// Partition-based colouring

std::optional<PartitionOutcome> partition_phase(const Graph& h, const BalancedSplit& parts, const PartitionFamily& family,
                                                const Params& p, Colour first) {
    const std::vector<int> part_of = parts.part_of();
    const std::size_t n = h.vertex_count();
    PartialColouring colouring(h.edge_count());

    for (int i = 0; i < p.s; ++i) {
        for (int j = 0; j < p.k; ++j) {
            const Colour c = first + i * p.k + j;
            for (std::size_t v = 0; v < n; ++v) {
                const auto vv = static_cast<Vertex>(v);
                if (h.degree(vv) == 0 || family.z_of(vv) == i || family.x_of(vv, i, j) != 2) continue;
                bool picked = false;
                for (EdgeId e : h.incident(vv)) {
                    if (part_of[static_cast<std::size_t>(e)] != i || colouring.is_coloured(e)) continue;
                    if (family.z_of(h.edge(e).other(vv)) != i) continue;
                    colouring.set(e, c);
                    picked = true;
                    break;
                }
                if (!picked) return std::nullopt;
            }
        }

        EdgeSet inside(h.edge_count());
        for (std::size_t e = 0; e < h.edge_count(); ++e) {
            const Edge& ed = h.edge(static_cast<EdgeId>(e));
            if (part_of[e] == i && family.z_of(ed.u) == i && family.z_of(ed.v) == i) inside.insert(static_cast<EdgeId>(e));
        }
        if (inside.empty()) continue;
        const Subgraph block = edge_subgraph(h, inside);
        const Subgraph forest = edge_subgraph(h, block.lift(spanning_forest(block.graph), h.edge_count()));
        const VertexPartition sides(two_colouring(forest.graph), 2);
        try {
            colouring.assign_from(four_colour_saturating(forest.graph, sides, first + p.s * p.k + 4 * i), forest.parent_edge);
        } catch (const PreconditionError& e) {
            throw AlgorithmFailure("saturation", e.what());
        }
    }

    PartitionOutcome out{std::move(colouring), EdgeSet(h.edge_count())};
    for (EdgeId e : is_conflict_free(h, out.colouring, Mode::hybrid).unsatisfied) out.r.insert(e);
    return out;
}

void audit_residual(const Graph& h, const PartitionFamily& family, const EdgeSet& r, const Params& p) {
    for (EdgeId e : r.ids())
        if (!family.always_bad(h.edge(e).u, h.edge(e).v))
            throw AlgorithmFailure("partition_phase", "edge " + std::to_string(e) + " is unsatisfied but not always bad");
    const auto deg = degrees_in(h, r);
    for (std::size_t v = 0; v < deg.size(); ++v)
        if (static_cast<double>(deg[v]) > 2 * p.log2_delta)
            throw AlgorithmFailure("partition_phase", "residual degree " + std::to_string(deg[v]) + " at vertex " +
                                                          std::to_string(v) + " exceeds 2 log2 Delta");
}

// ---------------------------------------------------------------------------
// Pipeline

namespace {

// Runs a phase on the subgraph spanned by `edges` and records its palette.
class PhaseRecorder {
public:
    explicit PhaseRecorder(PartialColouring& target) : target_(target) {}

    void record(ColourReport& report, const std::string& name, const PartialColouring& sub, const std::vector<EdgeId>& map) {
        target_.assign_from(sub, map);
        report.phases.push_back({name, sub.palette()});
    }

private:
    PartialColouring& target_;
};

PartialColouring chromatic_phase(const Graph& g, Colour first, Colour& next) {
    const VertexColouring vcol = degeneracy_colouring(g);
    PartialColouring c = cf_by_chromatic(g, vcol, first);
    next = first + chromatic_bound(vcol.count);
    return c;
}

}  // namespace

AsymptoticResult colour_asymptotic(const Graph& g, const AsymptoticOptions& options) {
    Params p = plan(g.max_degree(), options.eps);
    if (options.core_threshold) p.d = *options.core_threshold;
    if (options.k) {
        if (*options.k < 1) throw InputError("k must be positive");
        p.k = *options.k;
    }
    if (options.s) {
        if (*options.s < 1) throw InputError("s must be positive");
        p.s = *options.s;
    }

    ColourReport report;
    report.params = p;
    report.explicit_bound = explicit_bound(p);

    const EdgeSet isolated = isolated_edges(g);
    const Subgraph g0 = edge_subgraph(g, EdgeSet::all(g.edge_count()) - isolated);
    const Graph& base = g0.graph;
    const InitialSplit split = initial_split(base, p);
    check_initial_split(base, split, p);
    if (split.core_empty) report.notes.push_back("empty core");
    if (!split.min_degree_ok) report.notes.push_back("minimum degree of H below 0.65d");

    PartialColouring work(base.edge_count());
    PhaseRecorder recorder(work);
    EdgeSet r(base.edge_count());
    bool partition_ran = false;

    if (!split.h.empty()) {
        const Subgraph h = edge_subgraph(base, split.h);
        const BalancedSplit h_parts = balanced_split(h.graph, p.s);
        try {
            for (int attempt = 0; attempt < options.sampler.restarts && !partition_ran; ++attempt) {
                ++report.attempts;
                const PartitionFamily family =
                    sample_partitions(h.graph, h_parts, p, Rng::derive(options.seed, static_cast<std::uint64_t>(attempt)), options.sampler);
                report.resamples += family.resamples;
                const auto outcome = partition_phase(h.graph, h_parts, family, p, 1);
                if (!outcome) continue;
                audit_residual(h.graph, family, outcome->r, p);

                PartialColouring partition(h.graph.edge_count()), saturation(h.graph.edge_count());
                const Colour split_at = 1 + p.s * p.k;
                for (std::size_t e = 0; e < outcome->colouring.size(); ++e)
                    if (const auto c = outcome->colouring.at(static_cast<EdgeId>(e)))
                        (*c < split_at ? partition : saturation).set(static_cast<EdgeId>(e), *c);
                recorder.record(report, "partition", partition, h.parent_edge);
                recorder.record(report, "saturation", saturation, h.parent_edge);
                r = h.lift(outcome->r, base.edge_count());
                partition_ran = true;
            }
            if (!partition_ran) throw AlgorithmFailure("partition_phase", "candidate edges ran out in every attempt");
        } catch (const PreconditionError& e) {
            if (e.code() != "infeasible") throw;
            report.notes.push_back(std::string("sampler infeasible: ") + e.what());
            r = split.h;
        }
    }
    report.regime = partition_ran && split.min_degree_ok ? "asymptotic" : "degenerate";
    for (std::size_t d : degrees_in(base, r)) report.residual_max_degree = std::max(report.residual_max_degree, d);

    Colour next = 1 + p.s * p.k + 4 * p.s;
    const Subgraph r_graph = edge_subgraph(base, r);
    const EdgeSet m_r = r_graph.lift(isolated_edges(r_graph.graph), base.edge_count());
    const EdgeSet r_prime = r - m_r;
    if (!r_prime.empty()) {
        const Subgraph sub = edge_subgraph(base, r_prime);
        Colour after = next;
        recorder.record(report, "residual", chromatic_phase(sub.graph, next, after), sub.parent_edge);
        next = after;
    }
    if (!split.d.empty()) {
        const Subgraph sub = edge_subgraph(base, split.d);
        Colour after = next;
        recorder.record(report, "degenerate", chromatic_phase(sub.graph, next, after), sub.parent_edge);
        next = after;
    }
    const EdgeSet forest_plus = split.f | m_r;
    if (!forest_plus.empty()) {
        const Subgraph sub = edge_subgraph(base, forest_plus);
        EdgeSet h_local(sub.graph.edge_count()), m_local(sub.graph.edge_count());
        for (std::size_t i = 0; i < sub.graph.edge_count(); ++i)
            (split.f.contains(sub.parent_edge[i]) ? h_local : m_local).insert(static_cast<EdgeId>(i));
        try {
            recorder.record(report, "forest", sixteen_colour(sub.graph, h_local, m_local, next), sub.parent_edge);
        } catch (const PreconditionError& e) {
            throw AlgorithmFailure("forest", e.what());
        }
        next += 16;
    }

    PartialColouring out(g.edge_count());
    out.assign_from(work, g0.parent_edge);
    PartialColouring fill(g.edge_count());
    for (std::size_t e = 0; e < out.size(); ++e)
        if (!out.is_coloured(static_cast<EdgeId>(e))) {
            out.set(static_cast<EdgeId>(e), next);
            fill.set(static_cast<EdgeId>(e), next);
        }
    report.phases.push_back({"fill", fill.palette()});

    std::set<Colour> seen;
    report.disjoint = true;
    for (const PhasePalette& phase : report.phases)
        for (Colour c : phase.colours)
            if (!seen.insert(c).second) report.disjoint = false;
    report.total = out.palette_size();
    report.within_bound = report.total <= report.explicit_bound;
    report.verdict = is_conflict_free(g, out, Mode::hybrid).conflict_free;
    return {std::move(out), std::move(report)};
}

}  // namespace cfe
