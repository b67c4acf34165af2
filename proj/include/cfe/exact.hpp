#pragma once

#include <cstddef>
#include <cstdint>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"
#include "cfe/verify.hpp"

namespace cfe {

struct ExactIndexResult {
    int value = 0;
    PartialColouring witness;
    std::uint64_t nodes_explored = 0;
};

struct ExactChromaticResult {
    int value = 0;
    VertexColouring witness;
    std::uint64_t nodes_explored = 0;
};

/// Minimum number of colours of a total edge colouring in which every edge is
/// satisfied under `mode`. Depth-first search with canonical colour order.
/// Throws InstanceTooLarge when |E| > max_edges.
ExactIndexResult exact_index(const Graph& g, Mode mode, std::size_t max_edges = 20);

/// Chromatic number with a proper colouring witness.
/// Throws InstanceTooLarge when n > max_vertices.
ExactChromaticResult exact_chromatic_number(const Graph& g, std::size_t max_vertices = 20);

}  // namespace cfe
