#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "cfe/error.hpp"
#include "cfe/graph_io.hpp"
#include "cfe/json_io.hpp"
#include "cfe/verify.hpp"
#include "cli.hpp"
#include "support/graphs.hpp"

using namespace cfe;
using namespace cfe::testing;

namespace {

struct Outcome {
    int code;
    std::string out, err;
};

Outcome call(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

const std::string kC5 = "0 1\n1 2\n2 3\n3 4\n4 0\n";
const std::string kC5Plus = "0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n";

}  // namespace

TEST_CASE("json round trip") {
    const Graph g = petersen();
    PartialColouring c(g.edge_count());
    for (EdgeId e = 0; e < static_cast<EdgeId>(g.edge_count()); e += 2) c.set(e, 1 + e % 5);
    const ColouredGraph back = colouring_from_json(colouring_to_json(g, c).dump());
    CHECK(back.graph.vertex_count() == g.vertex_count());
    CHECK(back.graph.edge_count() == g.edge_count());
    CHECK(back.colouring == c);

    const ColouredGraph no_n = colouring_from_json(R"({"edges": [[0, 3]], "colour": [null]})");
    CHECK(no_n.graph.vertex_count() == 4);
    CHECK_FALSE(no_n.colouring.is_coloured(0));
}

TEST_CASE("malformed colouring documents") {
    CHECK_THROWS_AS(colouring_from_json("not json"), InputError);
    CHECK_THROWS_AS(colouring_from_json("[]"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 1]]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 1]], "colour": []})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 1]], "colour": [0]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 1]], "colour": ["a"]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, -1]], "colour": [1]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 0]], "colour": [1]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"n": 1, "edges": [[0, 1]], "colour": [1]})"), InputError);
    CHECK_THROWS_AS(colouring_from_json(R"({"edges": [[0, 1], [1, 0]], "colour": [1, 2]})"), InputError);
}

TEST_CASE("exact prints the value first") {
    const auto ccf = call({"exact", "--mode", "ccf"}, kC5);
    CHECK(ccf.code == 0);
    CHECK(ccf.out.rfind("2\n", 0) == 0);
    CHECK(call({"exact", "--mode", "ocf"}, kC5).out.rfind("3\n", 0) == 0);
    CHECK(call({"exact", "--mode", "ccf"}, kC5Plus).out.rfind("3\n", 0) == 0);
    CHECK(call({"exact", "--mode", "ocf"}, kC5Plus).out.rfind("2\n", 0) == 0);
    CHECK(call({"exact", "--mode", "chi"}, kC5).out.rfind("3\n", 0) == 0);

    const auto witness = call({"exact", "--mode", "cf"}, kC5);
    const std::string json = witness.out.substr(witness.out.find('\n') + 1);
    const ColouredGraph parsed = colouring_from_json(json);
    CHECK(is_conflict_free(parsed.graph, parsed.colouring, Mode::hybrid).conflict_free);

    std::string big;
    for (int v = 1; v <= 25; ++v) big += "0 " + std::to_string(v) + "\n";
    CHECK(call({"exact", "--mode", "cf"}, big).code == 2);
}

TEST_CASE("colour output verifies through verify") {
    const std::string graph = write_graph(random_graph(40, 0.2, 3), GraphFormat::edgelist);
    for (const char* method : {"chromatic", "total", "asymptotic"}) {
        CAPTURE(method);
        const auto coloured = call({"colour", "--method", method}, graph);
        REQUIRE(coloured.code == 0);
        for (const char* mode : {"cf", "ccf", "ocf"}) {
            if (std::string(method) == "chromatic" && std::string(mode) != "cf") continue;
            CHECK(call({"verify", "--mode", mode}, coloured.out).code == 0);
        }
    }
    const std::string bipartite = write_graph(random_bipartite(12, 14, 0.3, 5).graph, GraphFormat::edgelist);
    for (const char* method : {"three", "four"}) {
        const auto coloured = call({"colour", "--method", method}, bipartite);
        CHECK(coloured.code == 0);
        CHECK(call({"verify"}, coloured.out).code == 0);
    }
    const auto odd = call({"colour", "--method", "sixteen"}, kC5);
    CHECK(odd.code == 0);
    CHECK(call({"verify"}, odd.out).code == 0);
    CHECK(call({"colour", "--method", "three"}, kC5).code == 2);
}

TEST_CASE("verify reports failures with exit 1") {
    const std::string bad = R"({"edges": [[0,1],[1,2],[2,3]], "colour": [1,1,1]})";
    const auto r = call({"verify", "--mode", "ccf"}, bad);
    CHECK(r.code == 1);
    CHECK(r.out.find("\"conflict_free\":false") != std::string::npos);
    CHECK(call({"verify"}, "garbage").code == 2);
}

TEST_CASE("asymptotic report and seeds") {
    const std::string graph = write_graph(complete(30), GraphFormat::edgelist);
    const auto a = call({"colour", "--method", "asymptotic", "--seed", "4"}, graph);
    const auto b = call({"colour", "--method", "asymptotic", "--seed", "4"}, graph);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    const Json doc = Json::parse(a.out);
    CHECK(doc["report"]["verdict"].get<bool>());
    CHECK(doc["report"]["total"].get<std::size_t>() <= doc["report"]["explicit_bound"].get<std::size_t>());
    CHECK(doc["report"]["seed"].get<std::uint64_t>() == 4);

    const auto forced = call({"colour", "--method", "asymptotic", "--core-threshold", "10", "--k", "2", "--s", "2"}, graph);
    CHECK(forced.code == 3);
    CHECK(forced.err.find("still holds") != std::string::npos);
    CHECK(call({"colour", "--method", "asymptotic", "--eps", "0"}, graph).code == 2);
}

TEST_CASE("gnp is reproducible and honours CFE_SEED") {
    const auto a = call({"gnp", "-n", "100", "-p", "0.3", "--seed", "7"});
    const auto b = call({"gnp", "-n", "100", "-p", "0.3", "--seed", "7"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(read_graph(a.out, GraphFormat::edgelist).edge_count() == gnp(100, 0.3, 7).edge_count());

    ::setenv("CFE_SEED", "7", 1);
    CHECK(call({"gnp", "-n", "100", "-p", "0.3"}).out == a.out);
    ::setenv("CFE_SEED", "x", 1);
    CHECK(call({"gnp", "-n", "100", "-p", "0.3"}).code == 2);
    ::unsetenv("CFE_SEED");
    CHECK(call({"gnp", "-n", "10", "-p", "1.5"}).code == 2);
}

TEST_CASE("decompose emits parts") {
    const std::string graph = write_graph(random_graph(30, 0.3, 1), GraphFormat::edgelist);
    const auto core = call({"decompose", "--core", "4"}, graph);
    REQUIRE(core.code == 0);
    const Json c = Json::parse(core.out);
    CHECK(c["h"].size() + c["rest"].size() == read_graph(graph, GraphFormat::edgelist).edge_count());

    const auto parts = call({"decompose", "--balanced", "3"}, graph);
    REQUIRE(parts.code == 0);
    CHECK(Json::parse(parts.out)["parts"].size() == 3);
    CHECK(call({"decompose"}, graph).code == 2);
    CHECK(call({"decompose", "--core", "2", "--balanced", "2"}, graph).code == 2);
}

TEST_CASE("lab subcommands") {
    const auto empty = call({"lab", "sweep", "--grid", "/nonexistent"});
    CHECK(empty.code == 2);

    const auto density = call({"lab", "density", "-n", "200", "-p", "0.5", "--samples", "5"});
    REQUIRE(density.code == 0);
    CHECK(Json::parse(density.out)["samples"].get<int>() == 5);

    const std::string mono = R"({"edges": [[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]], "colour": [1,1,1,1,1,1,1,1,1,1]})";
    const Json w = Json::parse(call({"lab", "witness"}, mono).out);
    CHECK(w["witness"]["alpha"].get<int>() == 1);
    const std::string partial = R"({"edges": [[0,1],[1,2]], "colour": [1,null]})";
    CHECK(call({"lab", "witness"}, partial).code == 2);
}

TEST_CASE("usage errors") {
    CHECK(call({}).code == 2);
    CHECK(call({"colour", "--method", "magic"}).code == 2);
    CHECK(call({"colour", "--bogus"}).code == 2);
    CHECK(call({"verify", "--mode", "strange"}).code == 2);
    CHECK(call({"--help"}).code == 0);
    CHECK(call({"colour", "--input", "/nonexistent/file"}).code == 2);
}
