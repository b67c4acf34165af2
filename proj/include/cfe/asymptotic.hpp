#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cfe/colouring.hpp"
#include "cfe/decompose.hpp"
#include "cfe/graph.hpp"

namespace cfe {

struct Params {
    double eps = 1.0;
    std::size_t delta = 0;
    double log2_delta = 0.0;  ///< L, kept as a real
    std::size_t d = 0;        ///< core threshold floor(10 L^3)
    int k = 0;                ///< ceil(5 / eps)
    int s = 0;                ///< ceil(L / k)
};

/// Throws InputError for delta < 2 or eps <= 0.
Params plan(std::size_t delta, double eps);

struct InitialSplit {
    EdgeSet h, d, f;
    std::vector<Vertex> core_vertices;
    bool core_empty = false;
    bool min_degree_ok = true;  ///< d_H(v) >= 0.65 d on every core vertex
};

/// Core at d, three balanced parts, a spanning forest of the third part moved
/// to F together with the isolated edges of the remainder. Requires g to have
/// no isolated edges and d >= 10.
InitialSplit initial_split(const Graph& g, const Params& p);

/// Checks that H, D and F partition E, that D has no trivial components and is
/// (d-1)-degenerate, and that F is a forest without trivial components covering
/// the core. Throws AlgorithmFailure.
void check_initial_split(const Graph& g, const InitialSplit& split, const Params& p);

struct SamplerOptions {
    /// Resamplings per restart; unset means max(10'000, 200 x number of events).
    std::optional<std::uint64_t> budget;
    int restarts = 3;
};

/// X_{v,i,j} in {1,2} and Z_v in [0,s) for every vertex (only vertices of H matter).
struct PartitionFamily {
    int s = 0, k = 0;
    std::vector<int> z;
    std::vector<std::uint8_t> x;  ///< x[(v*s + i)*k + j]
    std::uint64_t resamples = 0;
    int restart = 0;

    int z_of(Vertex v) const { return z[static_cast<std::size_t>(v)]; }
    int x_of(Vertex v, int i, int j) const {
        return x[(static_cast<std::size_t>(v) * static_cast<std::size_t>(s) + static_cast<std::size_t>(i)) *
                     static_cast<std::size_t>(k) +
                 static_cast<std::size_t>(j)];
    }
    /// u and v straddle U_1 and U_2 in no partition.
    bool always_bad(Vertex u, Vertex v) const;
};

/// Moser-Tardos resampling until no Q_{v,i} (fewer than L H_i-neighbours in
/// U_3^i) and no A_v (more than 2L always-bad H-edges) holds. `h` keeps the
/// vertex set of G; `parts` has s parts. Throws PreconditionError("infeasible")
/// when a degree precheck rules out success and AlgorithmFailure naming a
/// violated event once every restart has spent its budget.
PartitionFamily sample_partitions(const Graph& h, const BalancedSplit& parts, const Params& p, std::uint64_t seed,
                                  const SamplerOptions& options = {});

struct PartitionOutcome {
    PartialColouring colouring;  ///< on h, colours first .. first + sk + 4s - 1
    EdgeSet r;                   ///< edges of h still unsatisfied
};

/// Colours c_{i,j} = first + i*k + j and four saturation colours per U_3^i.
/// nullopt when some vertex runs out of candidate edges.
std::optional<PartitionOutcome> partition_phase(const Graph& h, const BalancedSplit& parts, const PartitionFamily& family,
                                                const Params& p, Colour first = 1);

/// Every edge of R is always bad and d_R(v) <= 2L. Throws AlgorithmFailure.
void audit_residual(const Graph& h, const PartitionFamily& family, const EdgeSet& r, const Params& p);

struct PhasePalette {
    std::string name;
    std::vector<Colour> colours;
};

struct ColourReport {
    Params params;
    std::vector<PhasePalette> phases;
    std::size_t total = 0;
    std::size_t explicit_bound = 0;
    bool within_bound = false;
    bool disjoint = false;
    bool verdict = false;
    std::string regime;  ///< "asymptotic" or "degenerate"
    std::vector<std::string> notes;
    std::size_t residual_max_degree = 0;
    std::uint64_t resamples = 0;
    int attempts = 0;
};

/// sk + 4s + (3 ceil(log2(2L+1)) + 16) + (3 ceil(log2 d) + 16) + 16 + 1.
std::size_t explicit_bound(const Params& p);

struct AsymptoticOptions {
    double eps = 1.0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> core_threshold;  ///< replaces d (must be >= 10)
    std::optional<int> k;
    std::optional<int> s;
    SamplerOptions sampler;
};

struct AsymptoticResult {
    PartialColouring colouring;  ///< total
    ColourReport report;
};

/// Full pipeline; requires max degree >= 2. Isolated edges receive the fill colour.
AsymptoticResult colour_asymptotic(const Graph& g, const AsymptoticOptions& options = {});

}  // namespace cfe
