#include <listcolor/graph.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using namespace listcolor;

namespace {

std::string data(const char * name)
{
    return std::string(LISTCOLOR_DATA) + "/" + name;
}

Graph two_triangles()
{
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
}

}

TEST_CASE("graph6 small values")
{
    Graph one = parse_graph6("@");
    CHECK(one.order() == 1);
    CHECK(one.size() == 0);

    Graph k2 = parse_graph6("A_");
    CHECK(k2.order() == 2);
    CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

    // D?{: 5 vertices, bits 000000 111100 -> edges 0-4, 1-4, 2-4, 3-4
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edges() == std::vector<Edge>{{0, 4}, {1, 4}, {2, 4}, {3, 4}});

    CHECK_THROWS_AS(parse_graph6("?"), ParseError);
    CHECK_THROWS_AS(Graph(0), GraphError);
}

TEST_CASE("graph6 agrees with an independent encoder")
{
    int rows = 0;
    for (const auto & line : oracle::read_lines(data("graph6_crosscheck.tsv"))) {
        std::istringstream in(line);
        std::string g6;
        int n = 0;
        std::getline(in, g6, '\t');
        in >> n;
        std::vector<Edge> edges;
        for (std::string tok; in >> tok;) {
            auto dash = tok.find('-');
            edges.push_back({std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1))});
        }
        Graph g = parse_graph6(g6);
        CHECK(g.order() == n);
        CHECK(g == Graph(n, edges));
        CHECK(to_graph6(g) == g6);
        ++rows;
    }
    CHECK(rows == 20);
}

TEST_CASE("graph6 round trip over the catalog and large orders")
{
    for (const auto & line : oracle::read_lines(data("connected_upto6.g6")))
        CHECK(to_graph6(parse_graph6(line)) == line);

    std::mt19937 rng(3);
    for (int n : {62, 63, 64}) {
        std::vector<Edge> edges;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                if (rng() % 5 == 0)
                    edges.push_back({a, b});
        Graph g(n, edges);
        std::string text = to_graph6(g);
        CHECK((n >= 63) == (text[0] == '~'));
        CHECK(parse_graph6(text) == g);
    }
}

TEST_CASE("graph6 errors name the offending byte")
{
    auto offset_of = [](std::string_view text) -> long {
        try {
            parse_graph6(text);
        }
        catch (const ParseError & e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of("A") == 1);       // missing body byte
    CHECK(offset_of("A`") == 1);      // padding bit set
    CHECK(offset_of("B ") == 1);      // character below '?'
    CHECK(offset_of("A__") == 2);     // trailing byte
    CHECK(offset_of("~~") >= 0);      // 8-byte header not supported
    CHECK(offset_of("~?A") >= 0);     // truncated 3-byte size
}

TEST_CASE("DOT export")
{
    Graph k2 = complete_graph(2);
    std::string dot = to_dot(k2, {{0, "{1,2}"}, {1, "{1,3}"}});
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("{1,2}") != std::string::npos);
    CHECK(dot.find("{1,3}") != std::string::npos);

    std::string empty = to_dot(Graph(3));
    CHECK(empty.find("--") == std::string::npos);
    for (const char * node : {"  0", "  1", "  2"})
        CHECK(empty.find(node) != std::string::npos);

    Graph theta = theta_graph(2, 2, 4);
    std::map<Vertex, std::string> labels{{0, "{1,2}"}, {1, "{1,3}"}, {2, "{1,2}"}, {3, "{2,3}"}, {4, "{1,2}"},
        {5, "{2,3}"}, {6, "{1,3}"}};
    std::string fig = to_dot(theta, labels);
    CHECK(fig.find("6 -- 1") == std::string::npos);
    CHECK(fig.find("1 -- 6") != std::string::npos);
    CHECK(fig.find("0 -- 4") != std::string::npos);

    CHECK_THROWS_AS(to_dot(k2, {{0, "a"}}), GraphError);
}

TEST_CASE("degrees and connectivity")
{
    CHECK(max_degree(complete_graph(4)) == 3);
    CHECK(max_degree(cycle_graph(5)) == 2);
    CHECK(max_degree(complete_bipartite(1, 4)) == 4);

    CHECK(is_connected(path_graph(4)));
    CHECK_FALSE(is_2connected(path_graph(4)));
    CHECK(is_connected(cycle_graph(4)));
    CHECK(is_2connected(cycle_graph(4)));
    CHECK_FALSE(is_connected(two_triangles()));
    CHECK_FALSE(is_2connected(complete_graph(2)));
    CHECK(connected_components(two_triangles()).size() == 2);
    CHECK(connected_components(two_triangles())[1].members() == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("connectivity agrees with the oracle on the catalog")
{
    for (const auto & line : oracle::read_lines(data("connected_upto6.g6"))) {
        Graph g = parse_graph6(line);
        CHECK(is_connected(g));
        CHECK(max_degree(g) == oracle::max_degree(g));
        CHECK(is_complete(g) == oracle::complete(g));
    }
}

TEST_CASE("induced subgraphs")
{
    Subgraph tri = induced_subgraph(complete_graph(4), VertexSet::of(4, {0, 2, 3}));
    CHECK(tri.graph == complete_graph(3));
    CHECK(tri.original == std::vector<Vertex>{0, 2, 3});
    CHECK(tri.local_index(4) == std::vector<Vertex>{0, -1, 1, 2});

    CHECK(induced_subgraph(cycle_graph(5), VertexSet::of(5, {1, 2, 3})).graph == path_graph(3));
    CHECK(induced_subgraph(cycle_graph(5), VertexSet::of(5, {0, 2})).graph == Graph(2));
    CHECK_THROWS_AS(induced_subgraph(cycle_graph(5), VertexSet(5)), GraphError);
}

TEST_CASE("adding edges")
{
    CHECK(add_edge(path_graph(3), 0, 2) == complete_graph(3));
    CHECK(add_edge(cycle_graph(4), 0, 2) == Graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}));
    CHECK(add_edge(Graph(2), 0, 1) == complete_graph(2));
    CHECK_THROWS_AS(add_edge(path_graph(3), 0, 1), GraphError);
    CHECK_THROWS_AS(add_edge(path_graph(3), 1, 1), GraphError);
    CHECK_THROWS_AS(add_edge(path_graph(3), 0, 3), GraphError);
}

TEST_CASE("construction rejects bad input")
{
    CHECK_THROWS_AS(Graph(65), GraphError);
    CHECK_THROWS_AS(Graph(-1), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(VertexSet::of(3, {3}), GraphError);
}

TEST_CASE("named constructions")
{
    Graph th = theta_graph(2, 2, 4);
    CHECK(th.order() == 7);
    CHECK(th.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 6}, {4, 5}, {5, 6}});
    CHECK(theta_graph(1, 2, 2) == Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}));
    CHECK_THROWS_AS(theta_graph(1, 1, 3), GraphError);
    CHECK(complete_bipartite(2, 3).size() == 6);
    CHECK(is_cycle(cycle_graph(6)));
    CHECK_FALSE(is_cycle(path_graph(6)));

    auto sides = bipartition(complete_bipartite(2, 3));
    REQUIRE(sides);
    CHECK(*sides == std::vector<int>{0, 0, 1, 1, 1});
    CHECK_FALSE(bipartition(cycle_graph(5)));
}
