#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include <etacolor/etacolor.hpp>

using namespace etacolor;
using EdgeVec = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

TEST_CASE("construction normalizes edge order and sorts") {
    Graph g(4, {{2, 1}, {0, 1}, {0, 3}});
    REQUIRE(g.num_vertices() == 4);
    REQUIRE(g.num_edges() == 3);
    REQUIRE(g.edges() == EdgeVec{{0, 1}, {0, 3}, {1, 2}});
    REQUIRE(g.neighbours(0) == std::vector<std::uint32_t>{1, 3});
    REQUIRE(g.neighbours(1) == std::vector<std::uint32_t>{0, 2});
}

TEST_CASE("construction rejects malformed input") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), BadInputError);         // endpoint out of range
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), BadInputError);         // loop
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), BadInputError); // duplicate after normalizing
}

TEST_CASE("adjacency queries agree in both storage modes") {
    // n = 5 uses the bitset rows; a graph above the bitset limit falls back
    // to binary search over sorted neighbour lists.
    Graph small(5, {{0, 1}, {1, 2}, {0, 4}});
    REQUIRE(small.row(0) != nullptr);
    CHECK(small.has_edge(1, 0));
    CHECK(small.has_edge(4, 0));
    CHECK_FALSE(small.has_edge(2, 3));
    CHECK_FALSE(small.has_edge(3, 3));

    const std::size_t big_n = Graph::kBitsetLimit + 1;
    Graph big(big_n, {{0, 1}, {5, static_cast<std::uint32_t>(big_n - 1)}});
    REQUIRE(big.row(0) == nullptr);
    CHECK(big.has_edge(1, 0));
    CHECK(big.has_edge(static_cast<std::uint32_t>(big_n - 1), 5));
    CHECK_FALSE(big.has_edge(0, 2));
    CHECK(big.degree(5) == 1);
}

TEST_CASE("degree bookkeeping") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
    CHECK(g.degree(0) == 3);
    CHECK(g.degree(4) == 0);
    CHECK(g.max_degree() == 3);

    Graph empty(3, {});
    CHECK(empty.max_degree() == 0);
    CHECK(empty.num_edges() == 0);
}

TEST_CASE("edge list parsing skips comments and blank lines") {
    std::istringstream in("# triangle plus pendant\n\n4 4\n0 1\n0 2\n# middle comment\n1 2\n2 3\n");
    Graph g = parse_edge_list(in);
    REQUIRE(g.num_vertices() == 4);
    REQUIRE(g.edges() == EdgeVec{{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

TEST_CASE("edge list parsing rejects malformed content") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_edge_list(in);
    };
    CHECK_THROWS_AS(parse(""), BadInputError);                 // no header
    CHECK_THROWS_AS(parse("abc\n"), BadInputError);            // non-numeric header
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), BadInputError);       // fewer edges than promised
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), BadInputError);       // u >= v
    CHECK_THROWS_AS(parse("3 1\n1 1\n"), BadInputError);       // u >= v (loop spelling)
    CHECK_THROWS_AS(parse("3 1\n0 x\n"), BadInputError);       // non-numeric edge
    CHECK_THROWS_AS(parse("2 1\n0 5\n"), BadInputError);       // endpoint out of range
}

TEST_CASE("edge list round-trips through write and parse") {
    Graph g(6, {{0, 5}, {1, 2}, {2, 3}});
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    Graph back = parse_edge_list(in);
    CHECK(back.num_vertices() == g.num_vertices());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("JSON graph format round-trips") {
    Graph g(4, {{0, 1}, {2, 3}});
    nlohmann::json j = graph_to_json(g);
    CHECK(j["n"] == 4);
    Graph back = parse_graph_json(j);
    CHECK(back.edges() == g.edges());

    CHECK_THROWS_AS(parse_graph_json(nlohmann::json::array()), BadInputError);
    CHECK_THROWS_AS(parse_graph_json(nlohmann::json{{"n", 3}}), BadInputError);
    CHECK_THROWS_AS(parse_graph_json(nlohmann::json{{"n", 3}, {"edges", {{0}}}}), BadInputError);
}

TEST_CASE("file loading sniffs the format from the first byte") {
    auto write_file = [](const std::string& path, const std::string& content) {
        std::ofstream out(path);
        out << content;
    };
    const std::string dir = "/tmp";
    write_file(dir + "/etacolor_g1.txt", "3 2\n0 1\n1 2\n");
    write_file(dir + "/etacolor_g2.json", "  {\"n\": 3, \"edges\": [[0,1],[1,2]]}\n");

    Graph a = load_graph(dir + "/etacolor_g1.txt");
    Graph b = load_graph(dir + "/etacolor_g2.json");
    CHECK(a.edges() == b.edges());
    CHECK_THROWS_AS(load_graph(dir + "/etacolor_nonexistent_file"), BadInputError);
}
