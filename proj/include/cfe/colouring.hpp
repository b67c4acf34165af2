#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cfe/graph.hpp"

namespace cfe {

using Colour = std::int32_t;

/// Edge colouring keyed by edge id. Colours are positive; an edge may be
/// uncoloured. Palettes need not be contiguous.
class PartialColouring {
public:
    PartialColouring() = default;
    explicit PartialColouring(std::size_t edge_count) : colour_(edge_count, kNone) {}

    std::size_t size() const noexcept { return colour_.size(); }

    std::optional<Colour> at(EdgeId e) const {
        const Colour c = colour_[static_cast<std::size_t>(e)];
        return c == kNone ? std::nullopt : std::optional<Colour>(c);
    }
    bool is_coloured(EdgeId e) const { return colour_[static_cast<std::size_t>(e)] != kNone; }
    /// 0 for uncoloured edges.
    Colour raw(EdgeId e) const { return colour_[static_cast<std::size_t>(e)]; }

    /// Throws InputError for non-positive colours.
    void set(EdgeId e, Colour c);
    void clear(EdgeId e) { colour_[static_cast<std::size_t>(e)] = kNone; }

    bool is_total() const;
    std::size_t coloured_count() const;
    /// Distinct colours in increasing order.
    std::vector<Colour> palette() const;
    std::size_t palette_size() const { return palette().size(); }
    Colour max_colour() const;

    /// Copies the colours of `sub` onto the parent edges of `map`.
    void assign_from(const PartialColouring& sub, const std::vector<EdgeId>& map);

    friend bool operator==(const PartialColouring&, const PartialColouring&) = default;

private:
    static constexpr Colour kNone = 0;
    std::vector<Colour> colour_;
};

/// Proper-or-not vertex colouring with classes 0..count-1.
struct VertexColouring {
    std::vector<int> colour;
    int count = 0;
};

bool is_proper(const Graph& g, const VertexColouring& c);

}  // namespace cfe
