#include "cfe/json_io.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "cfe/error.hpp"

namespace cfe {

Json colouring_to_json(const Graph& g, const PartialColouring& c) {
    Json edges = Json::array(), colour = Json::array();
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); ++e) {
        edges.push_back({g.edge(e).u, g.edge(e).v});
        if (const auto col = c.at(e))
            colour.push_back(*col);
        else
            colour.push_back(nullptr);
    }
    Json out;
    out["n"] = g.vertex_count();
    out["edges"] = std::move(edges);
    out["colour"] = std::move(colour);
    return out;
}

namespace {

Vertex vertex_of(const Json& v) {
    if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("colouring JSON: vertex ids must be non-negative integers");
    return static_cast<Vertex>(v.get<long long>());
}

}  // namespace

ColouredGraph colouring_from_json(std::string_view text) {
    const Json doc = Json::parse(text.begin(), text.end(), nullptr, false);
    if (doc.is_discarded() || !doc.is_object()) throw InputError("colouring JSON: not a JSON object");
    if (!doc.contains("edges") || !doc["edges"].is_array()) throw InputError("colouring JSON: missing \"edges\" array");
    if (!doc.contains("colour") || !doc["colour"].is_array()) throw InputError("colouring JSON: missing \"colour\" array");
    const Json& edges = doc["edges"];
    const Json& colour = doc["colour"];
    if (edges.size() != colour.size()) throw InputError("colouring JSON: \"edges\" and \"colour\" differ in length");

    std::vector<std::pair<Vertex, Vertex>> pairs;
    std::size_t n = 0;
    for (const Json& e : edges) {
        if (!e.is_array() || e.size() != 2) throw InputError("colouring JSON: an edge must be a pair [u, v]");
        pairs.emplace_back(vertex_of(e[0]), vertex_of(e[1]));
        n = std::max({n, static_cast<std::size_t>(pairs.back().first) + 1, static_cast<std::size_t>(pairs.back().second) + 1});
    }
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned()) throw InputError("colouring JSON: \"n\" must be a non-negative integer");
        const auto declared = doc["n"].get<std::size_t>();
        if (declared < n) throw InputError("colouring JSON: an endpoint exceeds \"n\"");
        n = declared;
    }

    ColouredGraph out{build_graph(n, pairs), PartialColouring(pairs.size())};
    for (std::size_t i = 0; i < colour.size(); ++i) {
        if (colour[i].is_null()) continue;
        if (!colour[i].is_number_integer() || colour[i].get<long long>() <= 0)
            throw InputError("colouring JSON: colours must be positive integers or null");
        out.colouring.set(static_cast<EdgeId>(i), static_cast<Colour>(colour[i].get<long long>()));
    }
    return out;
}

Json params_to_json(const Params& p) {
    Json out;
    out["eps"] = p.eps;
    out["delta"] = p.delta;
    out["log2_delta"] = p.log2_delta;
    out["d"] = p.d;
    out["k"] = p.k;
    out["s"] = p.s;
    return out;
}

Json report_to_json(const ColourReport& report) {
    Json phases = Json::array();
    for (const PhasePalette& phase : report.phases) phases.push_back({{"name", phase.name}, {"colours", phase.colours}});
    Json out;
    out["params"] = params_to_json(report.params);
    out["regime"] = report.regime;
    out["phases"] = std::move(phases);
    out["total"] = report.total;
    out["explicit_bound"] = report.explicit_bound;
    out["within_bound"] = report.within_bound;
    out["disjoint"] = report.disjoint;
    out["residual_max_degree"] = report.residual_max_degree;
    out["resamples"] = report.resamples;
    out["attempts"] = report.attempts;
    out["notes"] = report.notes;
    out["verdict"] = report.verdict;
    return out;
}

Json witness_to_json(const LowerBoundWitness& w) {
    Json out;
    out["palette"] = w.palette;
    out["class"] = w.palette_class;
    out["alpha"] = w.alpha;
    out["f"] = w.f;
    out["edge"] = w.edge;
    out["centre"] = w.centre;
    return out;
}

}  // namespace cfe
