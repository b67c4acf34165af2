#include "cfe/colouring.hpp"

#include <algorithm>
#include <string>

#include "cfe/error.hpp"

namespace cfe {

void PartialColouring::set(EdgeId e, Colour c) {
    if (c <= 0) throw InputError("colours must be positive, got " + std::to_string(c));
    colour_[static_cast<std::size_t>(e)] = c;
}

bool PartialColouring::is_total() const {
    return std::none_of(colour_.begin(), colour_.end(), [](Colour c) { return c == kNone; });
}

std::size_t PartialColouring::coloured_count() const {
    return static_cast<std::size_t>(
        std::count_if(colour_.begin(), colour_.end(), [](Colour c) { return c != kNone; }));
}

std::vector<Colour> PartialColouring::palette() const {
    std::vector<Colour> out;
    for (Colour c : colour_) {
        if (c != kNone) out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Colour PartialColouring::max_colour() const {
    Colour best = kNone;
    for (Colour c : colour_) best = std::max(best, c);
    return best;
}

void PartialColouring::assign_from(const PartialColouring& sub, const std::vector<EdgeId>& map) {
    for (std::size_t i = 0; i < sub.size(); ++i) {
        if (const auto c = sub.at(static_cast<EdgeId>(i))) set(map[i], *c);
    }
}

bool is_proper(const Graph& g, const VertexColouring& c) {
    if (c.colour.size() != g.vertex_count()) return false;
    for (int x : c.colour) {
        if (x < 0 || x >= c.count) return false;
    }
    for (const Edge& e : g.edges()) {
        if (c.colour[static_cast<std::size_t>(e.u)] == c.colour[static_cast<std::size_t>(e.v)]) return false;
    }
    return true;
}

}  // namespace cfe
