#pragma once

#include <vector>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"

namespace cfe {

// Bipartite operations take the bipartition explicitly as a two-block
// VertexPartition: block 0 is X, block 1 is Y.

enum class StarKind { star_at_x, subdivided_star_at_y };

struct StarComponent {
    StarKind kind;
    Vertex centre;
    std::vector<EdgeId> edges;
};

/// Subgraph covering Y whose components are stars centred in X (>= 2 edges)
/// or subdivided stars centred in Y (>= 4 edges).
struct StarCover {
    EdgeSet h;
    std::vector<StarComponent> components;
};

/// Requires g connected (ignoring isolated vertices), with at least two edges,
/// bipartite for (X,Y) and not a star centred in Y. Violations raise
/// PreconditionError with codes not_bipartite, disconnected, trivial, star_at_y.
StarCover star_cover(const Graph& g, const VertexPartition& part);

/// Throws AlgorithmFailure if the cover misses a Y vertex or has a bad component.
void check_star_cover(const Graph& g, const VertexPartition& part, const StarCover& cover);

/// Partial colouring with colours first..first+2 satisfying every edge; every
/// Y vertex, and every X vertex with a coloured edge, sees a uniquely coloured
/// edge. Requires no single-edge components.
PartialColouring three_colour(const Graph& g, const VertexPartition& part, Colour first = 1);

/// three_colour plus colour first+3 on the lowest-id edge of each X vertex left
/// without a coloured edge: every non-isolated vertex sees a unique colour.
PartialColouring four_colour_saturating(const Graph& g, const VertexPartition& part, Colour first = 1);

/// Satisfies every edge of g = H' + M' with colours first..first+15, where H'
/// is bipartite, spans every non-isolated vertex and has no single-edge
/// components, and M' is a matching.
PartialColouring sixteen_colour(const Graph& g, const EdgeSet& h_prime, const EdgeSet& m_prime, Colour first = 1);

}  // namespace cfe
