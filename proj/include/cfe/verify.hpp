#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cfe/colouring.hpp"
#include "cfe/graph.hpp"

namespace cfe {

/// Which neighbourhood must contain a uniquely coloured edge.
///  - closed: some colour occurs exactly once on E[e] (e itself may carry it);
///  - open:   some colour occurs exactly once on E(e); vacuous when E(e) is empty;
///  - hybrid: some e' in E(e) carries a colour that no other edge of E[e] carries;
///            vacuous when E(e) is empty. Implies both of the above.
enum class Mode { closed, open, hybrid };

/// Accepts "closed"/"ccf", "open"/"ocf", "hybrid"/"cf".
Mode parse_mode(std::string_view name);
std::string_view mode_name(Mode mode);

struct SatisfactionCertificate {
    EdgeId edge = -1;
    /// Empty for the vacuous certificate of an edge with empty open neighbourhood.
    std::optional<EdgeId> witness;
    std::optional<Colour> colour;
    Mode mode = Mode::hybrid;

    bool vacuous() const noexcept { return !witness.has_value(); }
};

/// Uncoloured edges carry no colour and never block uniqueness. For closed
/// mode and partial colourings this counts uniqueness among coloured edges.
/// Throws InputError on an invalid edge id or a colouring of the wrong size.
std::optional<SatisfactionCertificate> satisfied(const Graph& g, const PartialColouring& c, EdgeId e,
                                                 Mode mode);

struct Verdict {
    bool conflict_free = false;
    std::vector<EdgeId> unsatisfied;
};

/// Checks every edge. Isolated edges are exempt in open and hybrid modes.
Verdict is_conflict_free(const Graph& g, const PartialColouring& c, Mode mode);

/// A coloured edge at v whose colour appears exactly once among the coloured
/// edges of E(v); the one with the smallest colour when several qualify.
std::optional<std::pair<EdgeId, Colour>> incident_unique(const Graph& g, const PartialColouring& c, Vertex v);

}  // namespace cfe
