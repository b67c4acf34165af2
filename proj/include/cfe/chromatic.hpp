#pragma once

#include <cstdint>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"

namespace cfe {

/// Smallest l with 2^l >= x; 0 for x <= 1.
int ceil_log2(std::uint64_t x);

struct ChromaticCFResult {
    PartialColouring colouring;
    EdgeSet residue;               ///< uncoloured edges left unsatisfied; a matching
    std::size_t palette_size = 0;  ///< distinct colours used
    int depth = 0;                 ///< recursion levels that coloured a cut
};

/// Recursive halving of the vertex classes with three fresh colours per level.
/// Uses colours first .. first + 3*ceil_log2(vcol.count) - 1; every edge outside
/// the residue is satisfied in hybrid mode. Throws PreconditionError
/// ("not_proper") when vcol is not a proper colouring of g.
ChromaticCFResult cf_by_chromatic_partial(const Graph& g, const VertexColouring& vcol, Colour first = 1);

/// Colour budget of cf_by_chromatic for a proper colouring with alpha classes.
int chromatic_bound(int alpha);

/// Satisfies every non-isolated edge with at most chromatic_bound(vcol.count)
/// colours starting at `first`: a spanning forest is set aside, the rest goes
/// through cf_by_chromatic_partial and the forest plus residue through
/// sixteen_colour.
PartialColouring cf_by_chromatic(const Graph& g, const VertexColouring& vcol, Colour first = 1);

/// cf_by_chromatic plus one extra colour on every uncoloured edge.
PartialColouring cf_total_by_chromatic(const Graph& g, const VertexColouring& vcol, Colour first = 1);

/// Degeneracy greedy colouring, or an optimal one when exact is set (n <= 20).
VertexColouring default_vertex_colouring(const Graph& g, bool exact = false);

}  // namespace cfe
