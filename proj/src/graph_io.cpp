#include "cfe/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "cfe/error.hpp"

namespace cfe {
namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

long long parse_int(std::string_view token, std::size_t line_no) {
    long long value = 0;
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw ParseError(line_no, "expected an integer, got '" + std::string(token) + "'");
    }
    return value;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        fn(text.substr(pos, end - pos), line_no);
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
}

Graph read_edgelist(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    long long max_vertex = -1;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) return;
        if (tokens.size() != 2) throw ParseError(line_no, "expected 'u v'");
        const long long u = parse_int(tokens[0], line_no);
        const long long v = parse_int(tokens[1], line_no);
        if (u < 0 || v < 0 || u > INT32_MAX || v > INT32_MAX) {
            throw ParseError(line_no, "vertex id out of range");
        }
        max_vertex = std::max({max_vertex, u, v});
        pairs.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });
    return build_graph(static_cast<std::size_t>(max_vertex + 1), pairs);
}

Graph read_dimacs(std::string_view text) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    long long n = -1;
    long long m = -1;
    std::size_t header_line = 0;
    for_each_line(text, [&](std::string_view line, std::size_t line_no) {
        const auto tokens = split_tokens(line);
        if (tokens.empty() || tokens[0] == "c") return;
        if (tokens[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "second 'p' line");
            if (tokens.size() != 4 || (tokens[1] != "edge" && tokens[1] != "col")) {
                throw ParseError(line_no, "expected 'p edge n m'");
            }
            n = parse_int(tokens[2], line_no);
            m = parse_int(tokens[3], line_no);
            if (n < 0 || m < 0 || n > INT32_MAX) throw ParseError(line_no, "negative or oversized header count");
            header_line = line_no;
            return;
        }
        if (tokens[0] == "e") {
            if (n < 0) throw ParseError(line_no, "'e' line before 'p' header");
            if (tokens.size() != 3) throw ParseError(line_no, "expected 'e u v'");
            const long long u = parse_int(tokens[1], line_no);
            const long long v = parse_int(tokens[2], line_no);
            if (u < 1 || v < 1 || u > n || v > n) {
                throw ParseError(line_no, "vertex out of range 1.." + std::to_string(n));
            }
            pairs.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
            return;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    });
    if (n < 0) throw ParseError(1, "missing 'p edge n m' header");
    if (static_cast<long long>(pairs.size()) != m) {
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(pairs.size()));
    }
    return build_graph(static_cast<std::size_t>(n), pairs);
}

}  // namespace

GraphFormat parse_graph_format(std::string_view name) {
    if (name == "edgelist") return GraphFormat::edgelist;
    if (name == "dimacs") return GraphFormat::dimacs;
    throw InputError("unknown graph format '" + std::string(name) + "'");
}

Graph read_graph(std::string_view text, GraphFormat format) {
    return format == GraphFormat::dimacs ? read_dimacs(text) : read_edgelist(text);
}

std::string write_graph(const Graph& g, GraphFormat format) {
    std::ostringstream out;
    if (format == GraphFormat::dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    } else {
        out << "# n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
        for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    }
    return out.str();
}

}  // namespace cfe
