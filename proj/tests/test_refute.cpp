#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <etacolor/etacolor.hpp>

#include "oracles.hpp"

using namespace etacolor;

namespace {

Colouring make_colouring(std::vector<std::uint32_t> assignment, std::uint32_t palette) {
    return Colouring{std::move(assignment), palette};
}

/// Three classes of two vertices each; all cross pairs present between
/// classes 1-2 and 2-3, nothing between classes 1 and 3.
Graph chain_of_classes() {
    return Graph(6, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}});
}

/// Complete tripartite graph on pairs: every edge except the three
/// within-class pairs (0,3), (1,4), (2,5).
Graph complete_tripartite_pairs() {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < 6; ++u)
        for (std::uint32_t v = u + 1; v < 6; ++v)
            if (v != u + 3) edges.emplace_back(u, v);
    return Graph(6, std::move(edges));
}

std::size_t distinct_colours_on(const Colouring& col, const Cycle& cyc) {
    return oracle::distinct_on(col.assignment, cyc);
}

}  // namespace

TEST_CASE("partition graph identifies classes, representatives, and open pairs") {
    Graph g = chain_of_classes();
    auto col = make_colouring({1, 1, 2, 2, 3, 3}, 3);
    auto pg = build_partition_graph(g, col);
    REQUIRE(pg.classes.size() == 3);
    CHECK(pg.classes[0].colour == 1);
    CHECK(pg.classes[0].reps == std::array<std::uint32_t, 2>{0, 1});
    CHECK(pg.classes[1].reps == std::array<std::uint32_t, 2>{2, 3});
    CHECK(pg.classes[2].reps == std::array<std::uint32_t, 2>{4, 5});
    for (const auto& mv : pg.classes) CHECK(mv.class_size == 2);
    // classes 1-2 and 2-3 have all four cross pairs; 1-3 has none
    REQUIRE(pg.open_edges.size() == 2);
    CHECK(pg.open_edges[0] == std::pair<std::uint32_t, std::uint32_t>{0, 1});
    CHECK(pg.open_edges[1] == std::pair<std::uint32_t, std::uint32_t>{1, 2});
}

TEST_CASE("partition graph drops small classes and rejects improper input") {
    // singleton classes vanish
    Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    auto rainbow = make_colouring({1, 2, 3}, 3);
    CHECK(build_partition_graph(k3, rainbow).classes.empty());

    Graph g(5, {{0, 2}, {1, 2}, {0, 3}, {1, 4}});
    auto col = make_colouring({1, 1, 2, 3, 3}, 3);
    auto pg = build_partition_graph(g, col);
    REQUIRE(pg.classes.size() == 2);   // the lone colour-2 vertex is gone
    CHECK(pg.classes[0].colour == 1);
    CHECK(pg.classes[1].colour == 3);
    CHECK(pg.classes[1].reps == std::array<std::uint32_t, 2>{3, 4});

    auto improper = make_colouring({1, 1, 1, 1, 1}, 1);
    CHECK_THROWS_AS(build_partition_graph(g, improper), BadInputError);
}

TEST_CASE("all cross edges present makes the partition graph complete") {
    Graph g = complete_tripartite_pairs();
    auto col = make_colouring({1, 2, 3, 1, 2, 3}, 3);
    auto pg = build_partition_graph(g, col);
    REQUIRE(pg.classes.size() == 3);
    CHECK(pg.open_edges.size() == 3);
}

TEST_CASE("a two-meta-edge path expands to a four-cycle on three classes") {
    Graph g = chain_of_classes();
    auto col = make_colouring({1, 1, 2, 2, 3, 3}, 3);
    SearchAnswer outcome = SearchAnswer::unknown;
    auto witness = refute_colouring(g, col, 4, {}, &outcome);
    REQUIRE(witness);
    CHECK(outcome == SearchAnswer::yes);
    REQUIRE(witness->size() == 4);
    CHECK(cycle_in_graph(g, *witness));
    CHECK(distinct_colours_on(col, *witness) == 3);
    // the middle class contributes both vertices, the ends one each
    std::set<std::uint32_t> verts(witness->begin(), witness->end());
    CHECK(verts.count(2) == 1);
    CHECK(verts.count(3) == 1);
    CHECK(static_cast<int>(verts.count(0)) + static_cast<int>(verts.count(1)) == 1);
    CHECK(static_cast<int>(verts.count(4)) + static_cast<int>(verts.count(5)) == 1);
}

TEST_CASE("a single open pair suffices for c=4 via the alternating four-cycle") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto col = make_colouring({1, 2, 1, 2}, 2);
    auto witness = refute_colouring(c4, col, 4);
    REQUIRE(witness);
    CHECK(*witness == Cycle{0, 1, 2, 3});
    CHECK(distinct_colours_on(col, *witness) == 2);
}

TEST_CASE("rainbow colourings cannot be refuted") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    auto col = make_colouring({1, 2, 3, 4}, 4);
    SearchAnswer outcome = SearchAnswer::unknown;
    CHECK_FALSE(refute_colouring(k4, col, 4, {}, &outcome));
    CHECK(outcome == SearchAnswer::no);
}

TEST_CASE("no open pair means no refutation") {
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    auto col = make_colouring({1, 2, 1, 2, 3}, 3);
    SearchAnswer outcome = SearchAnswer::unknown;
    CHECK_FALSE(refute_colouring(c5, col, 4, {}, &outcome));
    CHECK(outcome == SearchAnswer::no);
}

TEST_CASE("odd thresholds are gated behind an explicit flag") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    auto col = make_colouring({1, 2, 1, 2}, 2);
    CHECK_THROWS_AS(refute_colouring(c4, col, 3), OddCUnsupportedError);
    CHECK_THROWS_AS(refute_colouring(c4, col, 5), OddCUnsupportedError);
    CHECK_THROWS_AS(refute_colouring(c4, col, 2), BadInputError);

    RefuteOptions odd;
    odd.allow_odd = true;
    auto witness = refute_colouring(c4, col, 3, odd);
    REQUIRE(witness);
    CHECK(witness->size() == 4);   // length c+1 for c=3
    CHECK(distinct_colours_on(col, *witness) == 2);
}

TEST_CASE("odd thresholds above three use a longer cycle with spare colours") {
    // four classes of two vertices each, all cross pairs present
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < 8; ++u)
        for (std::uint32_t v = u + 1; v < 8; ++v)
            if (v != u + 4) edges.emplace_back(u, v);
    Graph g(8, std::move(edges));
    auto col = make_colouring({1, 2, 3, 4, 1, 2, 3, 4}, 4);
    RefuteOptions odd;
    odd.allow_odd = true;
    auto witness = refute_colouring(g, col, 5, odd);
    REQUIRE(witness);
    CHECK(witness->size() == 6);   // c+1
    CHECK(cycle_in_graph(g, *witness));
    CHECK(distinct_colours_on(col, *witness) <= 4);
}

TEST_CASE("an exhausted meta-path budget reports unknown") {
    // c=6 requires a three-edge meta-path and has no short-circuit route;
    // four classes make that path feasible so the search actually starts
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u < 8; ++u)
        for (std::uint32_t v = u + 1; v < 8; ++v)
            if (v != u + 4) edges.emplace_back(u, v);
    Graph g(8, std::move(edges));
    auto col = make_colouring({1, 2, 3, 4, 1, 2, 3, 4}, 4);
    RefuteOptions opts;
    opts.path_budget = 0;
    SearchAnswer outcome = SearchAnswer::yes;
    CHECK_FALSE(refute_colouring(g, col, 6, opts, &outcome));
    CHECK(outcome == SearchAnswer::unknown);
}

TEST_CASE("witnesses survive independent structural re-verification") {
    std::size_t found = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = sample_graph(EdgeProbabilityModel::uniform(14, 0.5), seed);
        Colouring col = greedy_colouring(g);
        std::size_t c = seed % 2 == 0 ? 4 : 6;
        auto witness = refute_colouring(g, col, c);
        if (!witness) continue;
        ++found;
        REQUIRE(witness->size() == c);
        CHECK(cycle_in_graph(g, *witness));
        CHECK(distinct_colours_on(col, *witness) <= c - 1);
        CHECK(*witness == canonical_cycle(*witness));
        // a refuted colouring genuinely fails strict verification; capping the
        // cycle length at c keeps the census small and still sees the witness
        VerifyOptions vo;
        vo.max_len = c;
        auto report = verify_colouring(g, col, Rational{0, 1}, c, vo);
        CHECK_FALSE(report.passes);
    }
    REQUIRE(found >= 10);   // dense graphs with greedy palettes refute readily
}
