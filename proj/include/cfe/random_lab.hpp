#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"

namespace cfe {

/// Binomial random graph: each pair u < v, in lexicographic order, is kept
/// when a uniform draw falls below p. Throws InputError unless 0 <= p <= 1.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// Set size, edge threshold and colour budget of the pigeonhole argument, with
/// the set size rounded up and the edge threshold rounded down.
struct LowerBoundParameters {
    double log2n = 0;
    std::size_t set_size = 0;   ///< ceil((log2 n)^2 / p)
    std::size_t threshold = 0;  ///< floor(2 (log2 n)^3 / p)
    int colours = 0;            ///< floor(log2(pn) - 2 log2 log2 n)
};

LowerBoundParameters lower_bound_parameters(std::size_t n, double p);

struct DensityReport {
    std::size_t set_size = 0, threshold = 0, samples = 0;
    std::size_t min_edges = 0, max_edges = 0;
    double mean_edges = 0;
    std::size_t below_threshold = 0;
};

/// Edges spanned by `samples` uniformly random vertex subsets of the given size.
DensityReport density_check(const Graph& g, std::size_t set_size, std::size_t threshold, std::size_t samples,
                            std::uint64_t seed);

/// Sorted colour set seen by each vertex.
std::vector<std::vector<Colour>> palettes(const Graph& g, const PartialColouring& c);

struct LowerBoundWitness {
    std::vector<Colour> palette;       ///< shared by every vertex of the class
    std::vector<Vertex> palette_class;
    Colour alpha = 0;
    std::vector<EdgeId> f;  ///< edges inside the class coloured alpha
    EdgeId edge = -1;       ///< uv with u, v in the class, coloured alpha
    Vertex centre = -1;     ///< endpoint with at least three F-edges
};

/// Looks through palette classes, largest first, for a colour whose edges inside
/// the class give some vertex F-degree >= 3. The returned edge is re-checked as
/// unsatisfied in closed and open modes (AlgorithmFailure otherwise). Throws
/// InputError for a partial colouring.
std::optional<LowerBoundWitness> collision_witness(const Graph& g, const PartialColouring& c);

struct SweepCell {
    std::size_t n = 0;
    double p = 0;
};

struct SweepRow {
    std::size_t n = 0;
    double p = 0;
    std::size_t delta = 0;
    std::string method;
    std::uint64_t seed = 0;
    std::optional<std::size_t> colours;
    double log2delta = 0;
    std::optional<std::size_t> bound;
    std::string verdict;  ///< "true", "false" or "error:<tag>"
};

/// Methods: chromatic, asymptotic, exact. Rows come out in grid, method, seed
/// order whatever the thread count.
std::vector<SweepRow> sweep(const std::vector<SweepCell>& grid, const std::vector<std::string>& methods,
                            const std::vector<std::uint64_t>& seeds, unsigned threads = 1);

inline constexpr const char* kSweepHeader = "n,p,delta,method,seed,colours,log2delta,bound,verdict";

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace cfe
