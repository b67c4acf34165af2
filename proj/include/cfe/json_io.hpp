#pragma once

#include <string_view>

#include "json.hpp"

#include "cfe/asymptotic.hpp"
#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"
#include "cfe/random_lab.hpp"

namespace cfe {

using Json = nlohmann::ordered_json;

/// {"n": n, "edges": [[u,v],...], "colour": [int or null,...]}, aligned with edge ids.
Json colouring_to_json(const Graph& g, const PartialColouring& c);

struct ColouredGraph {
    Graph graph;
    PartialColouring colouring;
};

/// Accepts the layout above; "n" is optional (defaults to 1 + largest endpoint).
/// Throws InputError on malformed documents.
ColouredGraph colouring_from_json(std::string_view text);

Json params_to_json(const Params& p);
Json report_to_json(const ColourReport& report);
Json witness_to_json(const LowerBoundWitness& w);

}  // namespace cfe
