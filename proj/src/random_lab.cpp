#include "cfe/random_lab.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <thread>

#include "cfe/asymptotic.hpp"
#include "cfe/chromatic.hpp"
#include "cfe/error.hpp"
#include "cfe/exact.hpp"
#include "cfe/rng.hpp"
#include "cfe/verify.hpp"

namespace cfe {

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
    Rng rng(seed);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return build_graph(n, pairs);
}

LowerBoundParameters lower_bound_parameters(std::size_t n, double p) {
    if (n < 2 || !(p > 0.0 && p <= 1.0)) throw InputError("need n >= 2 and 0 < p <= 1");
    LowerBoundParameters out;
    out.log2n = std::log2(static_cast<double>(n));
    out.set_size = static_cast<std::size_t>(std::ceil(out.log2n * out.log2n / p));
    out.threshold = static_cast<std::size_t>(std::floor(2.0 * out.log2n * out.log2n * out.log2n / p));
    const double log2log2n = out.log2n > 1.0 ? std::log2(out.log2n) : 0.0;
    out.colours = static_cast<int>(std::floor(std::log2(p * static_cast<double>(n)) - 2.0 * log2log2n));
    return out;
}

DensityReport density_check(const Graph& g, std::size_t set_size, std::size_t threshold, std::size_t samples,
                            std::uint64_t seed) {
    const std::size_t n = g.vertex_count();
    if (set_size > n) throw InputError("set size exceeds the vertex count");
    DensityReport report{set_size, threshold, samples, 0, 0, 0.0, 0};
    Rng rng(seed);
    std::vector<Vertex> pool(n);
    std::vector<char> chosen(n, 0);
    double sum = 0;
    for (std::size_t t = 0; t < samples; ++t) {
        for (std::size_t v = 0; v < n; ++v) pool[v] = static_cast<Vertex>(v);
        for (std::size_t i = 0; i < set_size; ++i) std::swap(pool[i], pool[i + rng.below(n - i)]);
        for (std::size_t i = 0; i < set_size; ++i) chosen[static_cast<std::size_t>(pool[i])] = 1;
        std::size_t spanned = 0;
        for (std::size_t i = 0; i < set_size; ++i)
            for (EdgeId e : g.incident(pool[i])) {
                const Vertex w = g.edge(e).other(pool[i]);
                if (chosen[static_cast<std::size_t>(w)] && pool[i] < w) ++spanned;
            }
        for (std::size_t i = 0; i < set_size; ++i) chosen[static_cast<std::size_t>(pool[i])] = 0;
        report.min_edges = t == 0 ? spanned : std::min(report.min_edges, spanned);
        report.max_edges = std::max(report.max_edges, spanned);
        if (spanned < threshold) ++report.below_threshold;
        sum += static_cast<double>(spanned);
    }
    report.mean_edges = samples ? sum / static_cast<double>(samples) : 0.0;
    return report;
}

std::vector<std::vector<Colour>> palettes(const Graph& g, const PartialColouring& c) {
    std::vector<std::vector<Colour>> out(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        for (EdgeId e : g.incident(static_cast<Vertex>(v)))
            if (c.is_coloured(e)) out[v].push_back(c.raw(e));
        std::sort(out[v].begin(), out[v].end());
        out[v].erase(std::unique(out[v].begin(), out[v].end()), out[v].end());
    }
    return out;
}

std::optional<LowerBoundWitness> collision_witness(const Graph& g, const PartialColouring& c) {
    if (c.size() != g.edge_count() || !c.is_total()) throw InputError("collision_witness needs a total colouring");
    const auto pal = palettes(g, c);

    std::map<std::vector<Colour>, std::vector<Vertex>> classes;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (g.degree(static_cast<Vertex>(v)) > 0) classes[pal[v]].push_back(static_cast<Vertex>(v));
    std::vector<const std::pair<const std::vector<Colour>, std::vector<Vertex>>*> order;
    for (const auto& entry : classes) order.push_back(&entry);
    std::stable_sort(order.begin(), order.end(), [](auto* a, auto* b) { return a->second.size() > b->second.size(); });

    std::vector<int> member(g.vertex_count(), -1);
    for (std::size_t ci = 0; ci < order.size(); ++ci) {
        const auto& [palette, vertices] = *order[ci];
        if (vertices.size() < 4) break;
        for (Vertex v : vertices) member[static_cast<std::size_t>(v)] = static_cast<int>(ci);

        // Edges inside the class, grouped by colour.
        std::map<Colour, std::vector<EdgeId>> by_colour;
        for (Vertex v : vertices)
            for (EdgeId e : g.incident(v)) {
                const Vertex w = g.edge(e).other(v);
                if (member[static_cast<std::size_t>(w)] == static_cast<int>(ci) && v < w) by_colour[c.raw(e)].push_back(e);
            }
        for (auto& [alpha, f] : by_colour) {
            std::sort(f.begin(), f.end());
            std::map<Vertex, int> deg;
            for (EdgeId e : f) {
                ++deg[g.edge(e).u];
                ++deg[g.edge(e).v];
            }
            for (EdgeId e : f) {
                const Edge& ed = g.edge(e);
                const Vertex centre = deg[ed.v] >= 3 ? ed.v : deg[ed.u] >= 3 ? ed.u : -1;
                if (centre < 0) continue;
                for (Mode mode : {Mode::closed, Mode::open})
                    if (satisfied(g, c, e, mode))
                        throw AlgorithmFailure("collision_witness", "edge " + std::to_string(e) + " is satisfied in " +
                                                                        std::string(mode_name(mode)) + " mode");
                return LowerBoundWitness{palette, vertices, alpha, f, e, centre};
            }
        }
    }
    return std::nullopt;
}

namespace {

SweepRow run_cell(const SweepCell& cell, const std::string& method, std::uint64_t seed) {
    SweepRow row;
    row.n = cell.n;
    row.p = cell.p;
    row.method = method;
    row.seed = seed;
    try {
        const Graph g = gnp(cell.n, cell.p, seed);
        row.delta = g.max_degree();
        row.log2delta = row.delta > 0 ? std::log2(static_cast<double>(row.delta)) : 0.0;
        if (method == "chromatic") {
            const VertexColouring vcol = default_vertex_colouring(g);
            const PartialColouring c = cf_total_by_chromatic(g, vcol);
            row.colours = c.palette_size();
            row.bound = static_cast<std::size_t>(chromatic_bound(vcol.count) + 1);
            row.verdict = is_conflict_free(g, c, Mode::hybrid).conflict_free ? "true" : "false";
        } else if (method == "asymptotic") {
            AsymptoticOptions options;
            options.seed = seed;
            const AsymptoticResult r = colour_asymptotic(g, options);
            row.colours = r.report.total;
            row.bound = r.report.explicit_bound;
            row.verdict = r.report.verdict && r.report.within_bound ? "true" : "false";
        } else if (method == "exact") {
            const ExactIndexResult r = exact_index(g, Mode::hybrid);
            row.colours = r.value;
            row.verdict = is_conflict_free(g, r.witness, Mode::hybrid).conflict_free ? "true" : "false";
        } else {
            row.verdict = "error:unknown_method";
        }
    } catch (const InstanceTooLarge&) {
        row.verdict = "error:too_large";
    } catch (const AlgorithmFailure& e) {
        row.verdict = "error:" + e.phase();
    } catch (const PreconditionError& e) {
        row.verdict = "error:" + e.code();
    } catch (const InputError&) {
        row.verdict = "error:input";
    }
    return row;
}

std::string shortest(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, res.ptr);
}

}  // namespace

std::vector<SweepRow> sweep(const std::vector<SweepCell>& grid, const std::vector<std::string>& methods,
                            const std::vector<std::uint64_t>& seeds, unsigned threads) {
    struct Job {
        const SweepCell* cell;
        const std::string* method;
        std::uint64_t seed;
    };
    std::vector<Job> jobs;
    for (const SweepCell& cell : grid)
        for (const std::string& method : methods)
            for (std::uint64_t seed : seeds) jobs.push_back({&cell, &method, seed});

    std::vector<SweepRow> rows(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = run_cell(*jobs[i].cell, *jobs[i].method, jobs[i].seed);
    };
    const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
        worker();
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow& r : rows) {
        char log2[32];
        std::snprintf(log2, sizeof log2, "%.6f", r.log2delta);
        out << r.n << ',' << shortest(r.p) << ',' << r.delta << ',' << r.method << ',' << r.seed << ','
            << (r.colours ? std::to_string(*r.colours) : "") << ',' << log2 << ','
            << (r.bound ? std::to_string(*r.bound) : "") << ',' << r.verdict << '\n';
    }
}

}  // namespace cfe
