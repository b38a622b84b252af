#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace listcolor {

using Vertex = int;
using Mask = std::uint64_t;

/// Hard ceiling on vertex count; adjacency rows are single 64-bit words.
inline constexpr int kMaxVertices = 64;

struct Edge {
    Vertex u;
    Vertex v;
    friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Raised when a value would break a Graph or VertexSet invariant.
class GraphError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// graph6 decoding failure; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & what, std::size_t offset);
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// A subset of [0, universe). Universe size is carried so that complements
/// and membership checks stay closed over the host graph.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe, Mask bits = 0);
    static VertexSet of(int universe, std::initializer_list<Vertex> members);
    static VertexSet of(int universe, std::span<const Vertex> members);
    static VertexSet full(int universe);

    int universe() const noexcept { return universe_; }
    Mask bits() const noexcept { return bits_; }
    bool contains(Vertex v) const noexcept { return v >= 0 && v < universe_ && ((bits_ >> v) & 1U); }
    bool empty() const noexcept { return bits_ == 0; }
    int size() const noexcept { return std::popcount(bits_); }
    void insert(Vertex v);
    void erase(Vertex v);
    std::vector<Vertex> members() const;

    VertexSet operator|(const VertexSet & o) const;
    VertexSet operator-(const VertexSet & o) const;
    VertexSet operator&(const VertexSet & o) const;
    VertexSet complement() const;

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

private:
    int universe_ = 0;
    Mask bits_ = 0;
};

/// Finite undirected simple graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept;
    bool adjacent(Vertex u, Vertex v) const noexcept { return (adj_[u] >> v) & 1U; }
    Mask neighbors(Vertex v) const noexcept { return adj_[v]; }
    int degree(Vertex v) const noexcept { return std::popcount(adj_[v]); }
    Mask all() const noexcept;

    /// Edges with u < v, sorted ascending.
    std::vector<Edge> edges() const;

    /// Copy of this graph with uv added. Rejects loops and existing edges.
    Graph with_edge(Vertex u, Vertex v) const;

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    void check_vertex(Vertex v) const;

    int n_ = 0;
    std::vector<Mask> adj_;
};

/// Induced subgraph relabelled to 0..|s|-1; `original[i]` is the host vertex
/// of new vertex i (ascending).
struct Subgraph {
    Graph graph;
    std::vector<Vertex> original;

    /// Host vertex -> local vertex, or -1 when outside the subgraph.
    std::vector<Vertex> local_index(int host_order) const;
};

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph & g);

/// Undirected DOT document with ascending vertex and edge order. Labels,
/// when given, must cover every vertex.
std::string to_dot(const Graph & g, const std::map<Vertex, std::string> & labels = {});

int max_degree(const Graph & g);
bool is_connected(const Graph & g);
/// n >= 3, connected and no cut vertex. K2 is deliberately excluded.
bool is_2connected(const Graph & g);
/// Vertex sets of connected components, ordered by least member.
std::vector<VertexSet> connected_components(const Graph & g);

Subgraph induced_subgraph(const Graph & g, const VertexSet & s);
Graph add_edge(const Graph & g, Vertex u, Vertex v);

bool is_complete(const Graph & g);
bool is_cycle(const Graph & g);

/// Two-colouring sides when g is bipartite (side of least vertex in each
/// component is 0).
std::optional<std::vector<int>> bipartition(const Graph & g);

// Named constructions used by examples, tests and the CLI.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int a, int b);
/// θ graph with endpoint u=0, v=1 and path interiors in argument order,
/// each listed from u towards v.
Graph theta_graph(int p, int q, int r);

}
