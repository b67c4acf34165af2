#include "cfe/verify.hpp"

#include <algorithm>
#include <string>

#include "cfe/error.hpp"

namespace cfe {
namespace {

// Colour multiplicities at one vertex, with up to two carrying edges per colour.
struct Tally {
    Colour colour;
    int count;
    EdgeId first;
    EdgeId second;
};

std::vector<Tally> tally_at(const Graph& g, const PartialColouring& c, Vertex v) {
    std::vector<std::pair<Colour, EdgeId>> coloured;
    for (EdgeId e : g.incident(v)) {
        if (const Colour col = c.raw(e); col != 0) coloured.emplace_back(col, e);
    }
    std::sort(coloured.begin(), coloured.end());
    std::vector<Tally> out;
    for (const auto& [col, e] : coloured) {
        if (!out.empty() && out.back().colour == col) {
            if (++out.back().count == 2) out.back().second = e;
        } else {
            out.push_back({col, 1, e, -1});
        }
    }
    return out;
}

std::optional<SatisfactionCertificate> certify(const Graph& g, const PartialColouring& c, EdgeId e, Mode mode,
                                               const std::vector<Tally>& at_u, const std::vector<Tally>& at_v) {
    const Edge& ed = g.edge(e);
    const bool open_empty = g.degree(ed.u) == 1 && g.degree(ed.v) == 1;
    if (open_empty && mode != Mode::closed) return SatisfactionCertificate{e, std::nullopt, std::nullopt, mode};

    const Colour own = c.raw(e);
    auto iu = at_u.begin();
    auto iv = at_v.begin();
    while (iu != at_u.end() || iv != at_v.end()) {
        Colour alpha;
        if (iv == at_v.end() || (iu != at_u.end() && iu->colour < iv->colour)) {
            alpha = iu->colour;
        } else {
            alpha = iv->colour;
        }
        const Tally* tu = (iu != at_u.end() && iu->colour == alpha) ? &*iu : nullptr;
        const Tally* tv = (iv != at_v.end() && iv->colour == alpha) ? &*iv : nullptr;
        if (tu) ++iu;
        if (tv) ++iv;

        const int mu = tu ? tu->count : 0;
        const int mv = tv ? tv->count : 0;
        const bool on_self = own == alpha;
        // e is counted at both endpoints when it carries alpha.
        const int closed_mult = mu + mv - (on_self ? 1 : 0);
        const int open_mult = closed_mult - (on_self ? 1 : 0);

        auto carrier_other_than_e = [&]() -> EdgeId {
            for (const Tally* t : {tu, tv}) {
                if (!t) continue;
                if (t->first != e) return t->first;
                if (t->second != -1 && t->second != e) return t->second;
            }
            return -1;
        };

        switch (mode) {
            case Mode::hybrid:
                if (!on_self && closed_mult == 1) {
                    return SatisfactionCertificate{e, carrier_other_than_e(), alpha, mode};
                }
                break;
            case Mode::closed:
                if (closed_mult == 1) {
                    return SatisfactionCertificate{e, on_self ? e : carrier_other_than_e(), alpha, mode};
                }
                break;
            case Mode::open:
                if (open_mult == 1) {
                    return SatisfactionCertificate{e, carrier_other_than_e(), alpha, mode};
                }
                break;
        }
    }
    return std::nullopt;
}

void check_sizes(const Graph& g, const PartialColouring& c) {
    if (c.size() != g.edge_count()) {
        throw InputError("colouring covers " + std::to_string(c.size()) + " edges, graph has " +
                         std::to_string(g.edge_count()));
    }
}

}  // namespace

Mode parse_mode(std::string_view name) {
    if (name == "closed" || name == "ccf") return Mode::closed;
    if (name == "open" || name == "ocf") return Mode::open;
    if (name == "hybrid" || name == "cf") return Mode::hybrid;
    throw InputError("unknown mode '" + std::string(name) + "'");
}

std::string_view mode_name(Mode mode) {
    switch (mode) {
        case Mode::closed: return "closed";
        case Mode::open: return "open";
        case Mode::hybrid: return "hybrid";
    }
    return "hybrid";
}

std::optional<SatisfactionCertificate> satisfied(const Graph& g, const PartialColouring& c, EdgeId e,
                                                 Mode mode) {
    check_sizes(g, c);
    if (!g.valid_edge(e)) throw InputError("invalid edge id " + std::to_string(e));
    const Edge& ed = g.edge(e);
    return certify(g, c, e, mode, tally_at(g, c, ed.u), tally_at(g, c, ed.v));
}

Verdict is_conflict_free(const Graph& g, const PartialColouring& c, Mode mode) {
    check_sizes(g, c);
    std::vector<std::vector<Tally>> tallies(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) tallies[v] = tally_at(g, c, static_cast<Vertex>(v));

    Verdict verdict;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        const auto e = static_cast<EdgeId>(i);
        const Edge& ed = g.edge(e);
        if (!certify(g, c, e, mode, tallies[static_cast<std::size_t>(ed.u)],
                     tallies[static_cast<std::size_t>(ed.v)])) {
            verdict.unsatisfied.push_back(e);
        }
    }
    verdict.conflict_free = verdict.unsatisfied.empty();
    return verdict;
}

std::optional<std::pair<EdgeId, Colour>> incident_unique(const Graph& g, const PartialColouring& c, Vertex v) {
    check_sizes(g, c);
    if (!g.valid_vertex(v)) throw InputError("invalid vertex " + std::to_string(v));
    for (const Tally& t : tally_at(g, c, v)) {
        if (t.count == 1) return std::make_pair(t.first, t.colour);
    }
    return std::nullopt;
}

}  // namespace cfe
