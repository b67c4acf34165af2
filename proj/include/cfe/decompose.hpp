#pragma once

#include <cstddef>
#include <vector>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"

namespace cfe {

struct CoreSplit {
    EdgeSet h;                          ///< edges of the d-core
    EdgeSet d;                          ///< the (d-1)-degenerate remainder
    std::vector<Vertex> removal_order;  ///< peeled vertices, first removed first
    std::vector<Vertex> core;           ///< vertices of the d-core, ascending
};

/// Peels vertices of degree < d (lowest id first among equal degrees).
CoreSplit core_split(const Graph& g, std::size_t d);

/// Throws AlgorithmFailure naming the first violated property.
void check_core_split(const Graph& g, const CoreSplit& split, std::size_t d);

/// Parts partition E and every vertex v has d(v)/k - 2 <= d_i(v) <= d(v)/k + 2.
struct BalancedSplit {
    std::vector<EdgeSet> parts;

    /// Index of the part holding each edge.
    std::vector<int> part_of() const;
};

/// Power-of-two k: recursive Euler-circuit halving. Other k: Euler orientation,
/// vertex splitting into degree-k copies and a proper k-edge-colouring of the
/// resulting bipartite graph. The degree bounds are checked before returning.
BalancedSplit balanced_split(const Graph& g, int k);

void check_balanced_split(const Graph& g, const BalancedSplit& split, int k);

struct DegeneracyOrder {
    std::vector<Vertex> order;  ///< removal order, repeatedly taking a minimum-degree vertex
    std::size_t degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const Graph& g);

/// Greedy along the reversed degeneracy order: at most degeneracy + 1 colours.
VertexColouring degeneracy_colouring(const Graph& g);

}  // namespace cfe
