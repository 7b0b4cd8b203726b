#include <catch2/catch_amalgamated.hpp>

#include <etacolor/etacolor.hpp>

#include "oracles.hpp"

using namespace etacolor;

namespace {

Graph complete(std::size_t n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t u = 0; u + 1 < n; ++u)
        for (std::uint32_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph petersen() {
    return Graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4},   // outer 5-cycle
                      {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},   // spokes
                      {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}}); // inner 5-cycle, step 2
}

}  // namespace

TEST_CASE("canonical form is invariant under rotation and reflection") {
    const Cycle canon{0, 1, 4, 3, 2};
    CHECK(canonical_cycle({0, 1, 4, 3, 2}) == canon);
    CHECK(canonical_cycle({4, 3, 2, 0, 1}) == canon);   // rotated
    CHECK(canonical_cycle({0, 2, 3, 4, 1}) == canon);   // reversed direction
    CHECK(canonical_cycle({3, 4, 1, 0, 2}) == canon);   // rotated and reversed
    CHECK(canonical_cycle({2, 0, 1}) == Cycle{0, 1, 2});
    CHECK(canonical_cycle({0, 2, 1}) == Cycle{0, 1, 2});
}

TEST_CASE("cycle membership checks edges, distinctness, and length") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(cycle_in_graph(c4, {0, 1, 2, 3}));
    CHECK(cycle_in_graph(c4, {2, 3, 0, 1}));            // any traversal counts
    CHECK_FALSE(cycle_in_graph(c4, {0, 2, 1, 3}));      // diagonals are not edges
    CHECK_FALSE(cycle_in_graph(c4, {0, 1, 2}));         // 0-2 is not an edge
    CHECK_FALSE(cycle_in_graph(c4, {0, 1}));            // too short
    CHECK_FALSE(cycle_in_graph(c4, {0, 1, 2, 1}));      // repeated vertex
    CHECK_FALSE(cycle_in_graph(c4, {0, 1, 2, 9}));      // out of range
}

TEST_CASE("complete-graph cycle counts by length") {
    // K5: C(5,3) triangles, C(5,4)*3 four-cycles, C(5,5)*12 five-cycles
    auto census = cycle_census(complete(5), 3, 5);
    REQUIRE_FALSE(census.truncated);
    CHECK(census.counts.at(3) == 10);
    CHECK(census.counts.at(4) == 15);
    CHECK(census.counts.at(5) == 12);
    CHECK(census.total() == 37);
}

TEST_CASE("enumeration agrees with the subset oracle exactly") {
    auto check_graph = [](const Graph& g) {
        const std::size_t n = g.num_vertices();
        auto got = enumerate_cycles(g, 3, n);
        auto want = oracle::cycles_by_subsets(g, 3, n);
        REQUIRE(got == want);
        for (const auto& c : got) {
            CHECK(cycle_in_graph(g, c));
            CHECK(canonical_cycle(c) == c);
        }
        // a restricted window must match the oracle's same window
        CHECK(enumerate_cycles(g, 4, 5) == oracle::cycles_by_subsets(g, 4, 5));
    };

    check_graph(complete(5));
    check_graph(complete(6));
    check_graph(petersen());
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        check_graph(sample_graph(EdgeProbabilityModel::uniform(6 + seed % 4, 0.35), seed));
}

TEST_CASE("the Petersen graph has girth five with twelve five-cycles") {
    auto census = cycle_census(petersen(), 3, 10);
    REQUIRE_FALSE(census.truncated);
    CHECK(census.counts.at(3) == 0);
    CHECK(census.counts.at(4) == 0);
    CHECK(census.counts.at(5) == 12);
    // every per-length count agrees with the oracle
    auto all = oracle::cycles_by_subsets(petersen(), 3, 10);
    std::map<std::size_t, std::uint64_t> want;
    for (std::size_t k = 3; k <= 10; ++k) want[k] = 0;
    for (const auto& c : all) ++want[c.size()];
    CHECK(census.counts == want);
}

TEST_CASE("length-window arguments are validated") {
    Graph g = complete(4);
    CHECK_THROWS_AS(enumerate_cycles(g, 2, 4), BadInputError);
    CHECK_THROWS_AS(enumerate_cycles(g, 5, 4), BadInputError);
    CHECK_THROWS_AS(cycle_census(g, 1, 3), BadInputError);
    CHECK_THROWS_AS(count_cycles(g, 2), BadInputError);
}

TEST_CASE("graphs too small for cycles yield empty results") {
    CHECK(enumerate_cycles(Graph(2, {{0, 1}}), 3, 5).empty());
    CHECK(enumerate_cycles(Graph(0, {}), 3, 5).empty());
    auto census = cycle_census(Graph(4, {{0, 1}, {2, 3}}), 3, 4);
    CHECK(census.counts.at(3) == 0);
    CHECK(census.counts.at(4) == 0);
    CHECK_FALSE(census.truncated);
}

TEST_CASE("cycle cap stops enumeration with the partial count attached") {
    Graph g = complete(6);  // 20 + 45 + 72 + 60 = 197 cycles in all
    bool threw = false;
    try {
        enumerate_cycles(g, 3, 6, 10);
    } catch (const CapExceededError& e) {
        threw = true;
        CHECK(e.partial_count == 10);
    }
    CHECK(threw);

    // the same cap leaves the census truncated instead of throwing
    auto census = cycle_census(g, 3, 6, 10);
    CHECK(census.truncated);
    CHECK(census.total() == 10);
    CHECK(census.cap == 10);
}

TEST_CASE("node budget exhaustion reports truncation") {
    Graph g = complete(7);
    CHECK_THROWS_AS(enumerate_cycles(g, 3, 7, 1'000'000, 50), CapExceededError);
    auto census = cycle_census(g, 3, 7, 1'000'000, 50);
    CHECK(census.truncated);

    bool threw = false;
    try {
        count_cycles(g, 5, 50'000'000, 50);
    } catch (const CapExceededError&) {
        threw = true;
    }
    CHECK(threw);
}

TEST_CASE("exact per-length counting matches enumeration") {
    Graph g = petersen();
    CHECK(count_cycles(g, 5) == 12);
    CHECK(count_cycles(g, 6) == oracle::cycles_by_subsets(g, 6, 6).size());
    CHECK(count_cycles(complete(5), 4) == 15);
    CHECK(count_cycles(Graph(3, {{0, 1}}), 3) == 0);
}
