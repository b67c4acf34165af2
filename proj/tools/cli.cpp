#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "cfe/asymptotic.hpp"
#include "cfe/bipartite.hpp"
#include "cfe/chromatic.hpp"
#include "cfe/decompose.hpp"
#include "cfe/error.hpp"
#include "cfe/exact.hpp"
#include "cfe/graph_io.hpp"
#include "cfe/json_io.hpp"
#include "cfe/random_lab.hpp"
#include "cfe/verify.hpp"

namespace cfe::cli {
namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) throw InputError(std::string("invalid ") + what + ": '" + std::string(text) + "'");
    return value;
}

std::uint64_t default_seed() {
    const char* env = std::getenv("CFE_SEED");
    return env && *env ? parse_u64(env, "CFE_SEED") : 0;
}

class Streams {
public:
    Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::string read(const std::string& path) const {
        if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    void write(const std::string& path, const std::string& text) const {
        if (path == "-") {
            out_ << text;
            return;
        }
        std::ofstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot write '" + path + "'");
        file << text;
    }

private:
    std::istream& in_;
    std::ostream& out_;
};

struct Common {
    std::string input = "-";
    std::string output = "-";
    std::string format = "edgelist";
};

void add_common(CLI::App& cmd, Common& c, bool graph_input) {
    cmd.add_option("-i,--input", c.input, "input path, '-' for stdin")->capture_default_str();
    cmd.add_option("-o,--output", c.output, "output path, '-' for stdout")->capture_default_str();
    if (graph_input)
        cmd.add_option("-f,--format", c.format, "graph format")
            ->check(CLI::IsMember({"edgelist", "dimacs"}))
            ->capture_default_str();
}

Graph read_input_graph(const Streams& io, const Common& c) {
    return read_graph(io.read(c.input), parse_graph_format(c.format));
}

std::string line(const Json& j) { return j.dump() + "\n"; }

// ---- colour ---------------------------------------------------------------

struct ColourArgs {
    Common io;
    std::string method = "chromatic";
    bool exact_chi = false;
    double eps = 1.0;
    std::uint64_t seed = 0;
    std::optional<std::size_t> core_threshold;
    std::optional<int> k, s;
};

// Bipartite methods run on g without its isolated edges, which stay uncoloured.
PartialColouring colour_bipartite(const Graph& g, const std::string& method) {
    const Subgraph core = edge_subgraph(g, EdgeSet::all(g.edge_count()) - isolated_edges(g));
    PartialColouring c(g.edge_count());
    if (core.graph.edge_count() == 0) return c;
    if (method == "sixteen") {
        const Subgraph forest = edge_subgraph(core.graph, spanning_forest(core.graph));
        std::vector<int> side = two_colouring(forest.graph);
        EdgeSet h(core.graph.edge_count()), m(core.graph.edge_count());
        for (EdgeId e = 0; e < static_cast<EdgeId>(core.graph.edge_count()); ++e) {
            const Edge& ed = core.graph.edge(e);
            (side[static_cast<std::size_t>(ed.u)] != side[static_cast<std::size_t>(ed.v)] ? h : m).insert(e);
        }
        c.assign_from(sixteen_colour(core.graph, h, m), core.parent_edge);
        return c;
    }
    std::vector<int> side = two_colouring(core.graph);
    if (side.empty()) throw PreconditionError("not_bipartite", "method '" + method + "' needs a bipartite graph");
    const VertexPartition part(std::move(side), 2);
    c.assign_from(method == "three" ? three_colour(core.graph, part) : four_colour_saturating(core.graph, part),
                  core.parent_edge);
    return c;
}

int colour(const Streams& io, const ColourArgs& a, std::ostream& err) {
    const Graph g = read_input_graph(io, a.io);
    PartialColouring c;
    Json report;
    report["method"] = a.method;
    bool verdict = true;

    if (a.method == "three" || a.method == "four" || a.method == "sixteen") {
        c = colour_bipartite(g, a.method);
        report["bound"] = a.method == "three" ? 3 : a.method == "four" ? 4 : 16;
    } else if (a.method == "chromatic" || a.method == "total") {
        const VertexColouring vcol = default_vertex_colouring(g, a.exact_chi);
        c = a.method == "chromatic" ? cf_by_chromatic(g, vcol) : cf_total_by_chromatic(g, vcol);
        report["alpha"] = vcol.count;
        report["bound"] = chromatic_bound(vcol.count) + (a.method == "total" ? 1 : 0);
    } else {
        AsymptoticOptions options;
        options.eps = a.eps;
        options.seed = a.seed;
        options.core_threshold = a.core_threshold;
        options.k = a.k;
        options.s = a.s;
        AsymptoticResult r = colour_asymptotic(g, options);
        c = std::move(r.colouring);
        verdict = r.report.verdict && r.report.within_bound;
        report = report_to_json(r.report);
        report["method"] = a.method;
        report["seed"] = a.seed;
    }

    const Verdict audit = is_conflict_free(g, c, Mode::hybrid);
    verdict = verdict && audit.conflict_free;
    report["colours"] = c.palette_size();
    report["unsatisfied"] = audit.unsatisfied;
    report["verdict"] = verdict;

    Json doc = colouring_to_json(g, c);
    doc["report"] = std::move(report);
    io.write(a.io.output, line(doc));
    if (!verdict) err << "colour: output failed self-verification\n";
    return verdict ? kOk : kVerdictFalse;
}

// ---- verify ---------------------------------------------------------------

int verify(const Streams& io, const Common& c, const std::string& mode_text) {
    const Mode mode = parse_mode(mode_text);
    const ColouredGraph input = colouring_from_json(io.read(c.input));
    const Verdict v = is_conflict_free(input.graph, input.colouring, mode);
    Json doc;
    doc["mode"] = mode_name(mode);
    doc["edges"] = input.graph.edge_count();
    doc["coloured"] = input.colouring.coloured_count();
    doc["colours"] = input.colouring.palette_size();
    doc["unsatisfied"] = v.unsatisfied;
    doc["conflict_free"] = v.conflict_free;
    io.write(c.output, line(doc));
    return v.conflict_free ? kOk : kVerdictFalse;
}

// ---- exact ----------------------------------------------------------------

int exact(const Streams& io, const Common& c, const std::string& mode, std::size_t limit) {
    const Graph g = read_input_graph(io, c);
    std::ostringstream text;
    if (mode == "chi") {
        const ExactChromaticResult r = exact_chromatic_number(g, limit);
        Json doc;
        doc["n"] = g.vertex_count();
        doc["colour"] = r.witness.colour;
        doc["nodes_explored"] = r.nodes_explored;
        text << r.value << '\n' << line(doc);
    } else {
        const ExactIndexResult r = exact_index(g, parse_mode(mode), limit);
        Json doc = colouring_to_json(g, r.witness);
        doc["nodes_explored"] = r.nodes_explored;
        text << r.value << '\n' << line(doc);
    }
    io.write(c.output, text.str());
    return kOk;
}

// ---- decompose ------------------------------------------------------------

int decompose(const Streams& io, const Common& c, std::optional<std::size_t> core, std::optional<int> balanced) {
    const Graph g = read_input_graph(io, c);
    Json doc;
    if (core) {
        const CoreSplit split = core_split(g, *core);
        check_core_split(g, split, *core);
        doc["d"] = *core;
        doc["core"] = split.core;
        doc["h"] = split.h.ids();
        doc["rest"] = split.d.ids();
    } else {
        const BalancedSplit split = balanced_split(g, *balanced);
        check_balanced_split(g, split, *balanced);
        doc["k"] = *balanced;
        Json parts = Json::array();
        for (const EdgeSet& part : split.parts) parts.push_back(part.ids());
        doc["parts"] = std::move(parts);
        doc["part_of"] = split.part_of();
    }
    io.write(c.output, line(doc));
    return kOk;
}

// ---- lab ------------------------------------------------------------------

std::vector<SweepCell> parse_grid(const std::string& text) {
    std::vector<SweepCell> grid;
    std::istringstream lines(text);
    std::string raw;
    for (std::size_t number = 1; std::getline(lines, raw); ++number) {
        if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
        std::replace(raw.begin(), raw.end(), ',', ' ');
        std::istringstream fields(raw);
        std::string n_text, p_text, extra;
        if (!(fields >> n_text)) continue;
        if (!(fields >> p_text) || (fields >> extra)) throw cfe::ParseError(number, "expected 'n p'");
        SweepCell cell;
        try {
            cell.n = parse_u64(n_text, "n");
            std::size_t used = 0;
            cell.p = std::stod(p_text, &used);
            if (used != p_text.size()) throw InputError("trailing characters");
        } catch (const std::exception&) {
            throw cfe::ParseError(number, "expected 'n p'");
        }
        grid.push_back(cell);
    }
    return grid;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) return {parse_u64(text, "seed")};
    const std::uint64_t lo = parse_u64(std::string_view(text).substr(0, dots), "seed range");
    const std::uint64_t hi = parse_u64(std::string_view(text).substr(dots + 2), "seed range");
    if (hi < lo) throw InputError("empty seed range '" + text + "'");
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const Streams io(in, out);
    CLI::App app{"Conflict-free edge colouring toolkit", "cfe"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    try {
        seed = default_seed();
    } catch (const InputError& e) {
        err << e.what() << '\n';
        return kUsage;
    }

    ColourArgs ca;
    ca.seed = seed;
    auto* colour_cmd = app.add_subcommand("colour", "colour a graph and self-verify the result");
    add_common(*colour_cmd, ca.io, true);
    colour_cmd->add_option("-m,--method", ca.method)
        ->check(CLI::IsMember({"three", "four", "sixteen", "chromatic", "total", "asymptotic"}))
        ->capture_default_str();
    colour_cmd->add_flag("--exact-chi", ca.exact_chi, "optimal vertex colouring (n <= 20)");
    colour_cmd->add_option("--eps", ca.eps)->capture_default_str();
    colour_cmd->add_option("--seed", ca.seed)->capture_default_str();
    colour_cmd->add_option("--core-threshold", ca.core_threshold, "replace the core threshold d");
    colour_cmd->add_option("--k", ca.k, "replace k (colours per partition)");
    colour_cmd->add_option("--s", ca.s, "replace s (number of parts)");

    Common vc;
    std::string verify_mode = "cf";
    auto* verify_cmd = app.add_subcommand("verify", "check a colouring JSON document");
    add_common(*verify_cmd, vc, false);
    verify_cmd->add_option("--mode", verify_mode)
        ->check(CLI::IsMember({"ccf", "ocf", "cf", "closed", "open", "hybrid"}))
        ->capture_default_str();

    Common ec;
    std::string exact_mode = "cf";
    std::size_t exact_limit = 20;
    auto* exact_cmd = app.add_subcommand("exact", "exact conflict-free index or chromatic number");
    add_common(*exact_cmd, ec, true);
    exact_cmd->add_option("--mode", exact_mode)->check(CLI::IsMember({"ccf", "ocf", "cf", "chi"}))->capture_default_str();
    exact_cmd->add_option("--limit", exact_limit, "largest |E| (or n for chi) searched")->capture_default_str();

    Common dc;
    std::optional<std::size_t> core_d;
    std::optional<int> balanced_k;
    auto* decompose_cmd = app.add_subcommand("decompose", "core split or balanced edge split");
    add_common(*decompose_cmd, dc, true);
    auto* core_opt = decompose_cmd->add_option("--core", core_d, "split off the d-core");
    auto* balanced_opt = decompose_cmd->add_option("--balanced", balanced_k, "split E into k balanced parts");
    core_opt->excludes(balanced_opt);

    Common gc;
    std::size_t gnp_n = 0;
    double gnp_p = 0;
    std::uint64_t gnp_seed = seed;
    auto* gnp_cmd = app.add_subcommand("gnp", "binomial random graph");
    gnp_cmd->add_option("-o,--output", gc.output)->capture_default_str();
    gnp_cmd->add_option("-f,--format", gc.format)->check(CLI::IsMember({"edgelist", "dimacs"}))->capture_default_str();
    gnp_cmd->add_option("-n", gnp_n)->required();
    gnp_cmd->add_option("-p", gnp_p)->required();
    gnp_cmd->add_option("--seed", gnp_seed)->capture_default_str();

    auto* lab_cmd = app.add_subcommand("lab", "random-graph experiments");
    lab_cmd->require_subcommand(1);

    std::string grid_path, seeds_text = "0", methods_text = "chromatic,asymptotic", sweep_out = "-";
    unsigned threads = 1;
    auto* sweep_cmd = lab_cmd->add_subcommand("sweep", "CSV over a grid of (n, p) and seeds");
    sweep_cmd->add_option("--grid", grid_path, "lines 'n p'")->required();
    sweep_cmd->add_option("--seeds", seeds_text, "a..b or a single seed")->capture_default_str();
    sweep_cmd->add_option("--methods", methods_text, "comma-separated: chromatic, asymptotic, exact")->capture_default_str();
    sweep_cmd->add_option("--threads", threads)->capture_default_str();
    sweep_cmd->add_option("-o,--output", sweep_out)->capture_default_str();

    std::size_t density_n = 0, samples = 100;
    double density_p = 0;
    std::uint64_t density_seed = seed;
    std::optional<std::size_t> set_size, threshold;
    std::string density_out = "-";
    auto* density_cmd = lab_cmd->add_subcommand("density", "edges spanned by random vertex sets of G(n, p)");
    density_cmd->add_option("-n", density_n)->required();
    density_cmd->add_option("-p", density_p)->required();
    density_cmd->add_option("--seed", density_seed)->capture_default_str();
    density_cmd->add_option("--samples", samples)->capture_default_str();
    density_cmd->add_option("--set-size", set_size);
    density_cmd->add_option("--threshold", threshold);
    density_cmd->add_option("-o,--output", density_out)->capture_default_str();

    Common wc;
    auto* witness_cmd = lab_cmd->add_subcommand("witness", "search a total colouring for a palette collision");
    add_common(*witness_cmd, wc, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "cfe: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (*colour_cmd) return colour(io, ca, err);
        if (*verify_cmd) return verify(io, vc, verify_mode);
        if (*exact_cmd) return exact(io, ec, exact_mode, exact_limit);
        if (*decompose_cmd) {
            if (!core_d && !balanced_k) throw InputError("decompose needs --core or --balanced");
            return decompose(io, dc, core_d, balanced_k);
        }
        if (*gnp_cmd) {
            io.write(gc.output, write_graph(gnp(gnp_n, gnp_p, gnp_seed), parse_graph_format(gc.format)));
            return kOk;
        }
        if (*sweep_cmd) {
            std::vector<std::string> methods;
            std::istringstream list(methods_text);
            for (std::string m; std::getline(list, m, ',');)
                if (!m.empty()) methods.push_back(m);
            for (const std::string& m : methods)
                if (m != "chromatic" && m != "asymptotic" && m != "exact") throw InputError("unknown method '" + m + "'");
            const auto rows = sweep(parse_grid(io.read(grid_path)), methods, parse_seeds(seeds_text), threads);
            std::ostringstream csv;
            write_sweep_csv(csv, rows);
            io.write(sweep_out, csv.str());
            return kOk;
        }
        if (*density_cmd) {
            const Graph g = gnp(density_n, density_p, density_seed);
            const LowerBoundParameters lb = lower_bound_parameters(density_n, density_p);
            const DensityReport r =
                density_check(g, set_size.value_or(lb.set_size), threshold.value_or(lb.threshold), samples, density_seed);
            Json doc;
            doc["n"] = density_n;
            doc["p"] = density_p;
            doc["seed"] = density_seed;
            doc["edges"] = g.edge_count();
            doc["log2n"] = lb.log2n;
            doc["colours"] = lb.colours;
            doc["set_size"] = r.set_size;
            doc["threshold"] = r.threshold;
            doc["samples"] = r.samples;
            doc["min_edges"] = r.min_edges;
            doc["mean_edges"] = r.mean_edges;
            doc["max_edges"] = r.max_edges;
            doc["below_threshold"] = r.below_threshold;
            io.write(density_out, line(doc));
            return kOk;
        }
        if (*witness_cmd) {
            const ColouredGraph input = colouring_from_json(io.read(wc.input));
            const auto w = collision_witness(input.graph, input.colouring);
            Json doc;
            doc["witness"] = w ? witness_to_json(*w) : Json(nullptr);
            io.write(wc.output, line(doc));
            return kOk;
        }
    } catch (const InputError& e) {
        err << "cfe: " << e.what() << '\n';
        return kUsage;
    } catch (const AlgorithmFailure& e) {
        err << "cfe: algorithm failure in " << e.what() << '\n';
        return kAlgorithmFailure;
    }
    err << app.help();
    return kUsage;
}

}  // namespace cfe::cli
