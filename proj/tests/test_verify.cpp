#include "doctest.h"

#include <random>

#include "cfe/error.hpp"
#include "cfe/verify.hpp"
#include "support/graphs.hpp"
#include "support/oracle.hpp"

using namespace cfe;
using namespace cfe::testing;

namespace {

PartialColouring colouring(std::initializer_list<Colour> colours) {
    PartialColouring c(colours.size());
    EdgeId e = 0;
    for (Colour x : colours) {
        if (x > 0) c.set(e, x);
        ++e;
    }
    return c;
}

oracle::Kind kind_of(Mode m) {
    switch (m) {
        case Mode::closed: return oracle::Kind::closed;
        case Mode::open: return oracle::Kind::open;
        case Mode::hybrid: return oracle::Kind::hybrid;
    }
    return oracle::Kind::hybrid;
}

}  // namespace

TEST_CASE("P3 examples") {
    const Graph p3 = path(3);
    const auto cert = satisfied(p3, colouring({1, 2}), 0, Mode::hybrid);
    REQUIRE(cert);
    CHECK(cert->witness == 1);
    CHECK(cert->colour == 2);

    CHECK_FALSE(satisfied(p3, colouring({1, 1}), 0, Mode::hybrid));
}

TEST_CASE("K_{1,3} coloured (1,2,2)") {
    const Graph k13 = star(3);
    const PartialColouring c = colouring({1, 2, 2});
    CHECK_FALSE(satisfied(k13, c, 0, Mode::hybrid));
    CHECK_FALSE(satisfied(k13, c, 0, Mode::open));
    const auto closed = satisfied(k13, c, 0, Mode::closed);
    REQUIRE(closed);
    CHECK(closed->witness == 0);
    CHECK(closed->colour == 1);
}

TEST_CASE("isolated edges") {
    const Graph g = build_graph(2, {{0, 1}});
    const PartialColouring none(1);
    CHECK(satisfied(g, none, 0, Mode::hybrid)->vacuous());
    CHECK(satisfied(g, none, 0, Mode::open)->vacuous());
    CHECK_FALSE(satisfied(g, none, 0, Mode::closed));
    CHECK(satisfied(g, colouring({3}), 0, Mode::closed)->witness == 0);
}

TEST_CASE("rainbow colourings are conflict-free") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Graph g = random_graph(12, 0.4, seed);
        PartialColouring c(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) c.set(static_cast<EdgeId>(e), static_cast<Colour>(e + 1));
        for (Mode m : {Mode::closed, Mode::open, Mode::hybrid}) CHECK(is_conflict_free(g, c, m).conflict_free);
    }
}

TEST_CASE("C5 with two colours: some colouring is closed-CF, none is open-CF") {
    const Graph c5 = cycle(5);
    bool any_closed = false;
    for (int mask = 0; mask < 32; ++mask) {
        PartialColouring c(5);
        for (int e = 0; e < 5; ++e) c.set(e, ((mask >> e) & 1) + 1);
        any_closed = any_closed || is_conflict_free(c5, c, Mode::closed).conflict_free;
        CHECK_FALSE(is_conflict_free(c5, c, Mode::open).conflict_free);
    }
    CHECK(any_closed);
}

TEST_CASE("verdict lists unsatisfied edges") {
    const Graph p3 = path(3);
    const Verdict v = is_conflict_free(p3, colouring({1, 1}), Mode::hybrid);
    CHECK_FALSE(v.conflict_free);
    CHECK(v.unsatisfied == std::vector<EdgeId>{0, 1});
    CHECK_THROWS_AS(is_conflict_free(p3, PartialColouring(3), Mode::hybrid), InputError);
    CHECK_THROWS_AS(satisfied(p3, PartialColouring(2), 5, Mode::hybrid), InputError);
}

TEST_CASE("incident_unique") {
    const Graph k13 = star(3);
    CHECK(incident_unique(k13, colouring({1, 2, 3}), 0));
    CHECK_FALSE(incident_unique(k13, colouring({2, 2, 2}), 0));
    const auto u = incident_unique(k13, colouring({2, 0, 2}), 0);
    CHECK_FALSE(u);
    const auto w = incident_unique(k13, colouring({2, 5, 2}), 0);
    REQUIRE(w);
    CHECK(w->first == 1);
    CHECK(w->second == 5);
}

TEST_CASE("certificates agree with the brute-force definitions on partial colourings") {
    std::mt19937_64 rng(7);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = random_graph(3 + static_cast<int>(seed % 6), 0.5, seed);
        oracle::EdgeList list;
        for (const Edge& e : g.edges()) list.emplace_back(e.u, e.v);
        for (int trial = 0; trial < 10; ++trial) {
            PartialColouring c(g.edge_count());
            std::vector<int> raw(g.edge_count(), 0);
            for (std::size_t e = 0; e < g.edge_count(); ++e) {
                raw[e] = static_cast<int>(rng() % 4);
                if (raw[e]) c.set(static_cast<EdgeId>(e), raw[e]);
            }
            for (Mode m : {Mode::closed, Mode::open, Mode::hybrid}) {
                for (std::size_t e = 0; e < g.edge_count(); ++e) {
                    const auto cert = satisfied(g, c, static_cast<EdgeId>(e), m);
                    CHECK(cert.has_value() == oracle::edge_ok(list, raw, e, kind_of(m)));
                    if (cert && !cert->vacuous()) {
                        // The witness carries the colour and lies in the right neighbourhood.
                        CHECK(c.at(*cert->witness) == cert->colour);
                        const Edge& a = g.edge(static_cast<EdgeId>(e));
                        CHECK((g.edge(*cert->witness).has(a.u) || g.edge(*cert->witness).has(a.v)));
                        if (m != Mode::closed) CHECK(*cert->witness != static_cast<EdgeId>(e));
                    }
                }
            }
        }
    }
}

TEST_CASE("hybrid certificates imply closed and open ones; renaming preserves them") {
    std::mt19937_64 rng(11);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Graph g = random_graph(9, 0.35, seed);
        PartialColouring c(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) c.set(static_cast<EdgeId>(e), 1 + static_cast<int>(rng() % 4));
        PartialColouring renamed(g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e)
            renamed.set(static_cast<EdgeId>(e), 100 - 7 * *c.at(static_cast<EdgeId>(e)));
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            const auto id = static_cast<EdgeId>(e);
            if (satisfied(g, c, id, Mode::hybrid)) {
                CHECK(satisfied(g, c, id, Mode::closed));
                CHECK(satisfied(g, c, id, Mode::open));
            }
            for (Mode m : {Mode::closed, Mode::open, Mode::hybrid})
                CHECK(satisfied(g, c, id, m).has_value() == satisfied(g, renamed, id, m).has_value());
        }
    }
}

TEST_CASE("mode names") {
    CHECK(parse_mode("ccf") == Mode::closed);
    CHECK(parse_mode("ocf") == Mode::open);
    CHECK(parse_mode("cf") == Mode::hybrid);
    CHECK(parse_mode("hybrid") == Mode::hybrid);
    CHECK_THROWS_AS(parse_mode("weird"), InputError);
}
