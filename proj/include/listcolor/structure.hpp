#pragma once

#include <listcolor/budget.hpp>
#include <listcolor/graph.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace listcolor {

struct BlockDecomposition {
    /// Sorted by member list; isolated vertices appear as singleton blocks.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph & g);

enum class BlockTag { Complete, CompleteBipartite, Cycle, Other };

std::string to_string(BlockTag tag);

struct BlockClass {
    BlockTag tag = BlockTag::Other;
    /// CompleteBipartite: the two parts, smaller-least-vertex part first.
    std::vector<Vertex> part_a, part_b;
    /// Cycle: vertices in cyclic order starting at 0, then the smaller neighbour.
    std::vector<Vertex> cycle_order;

    /// Complete, complete bipartite and cycle blocks are the exempt ones.
    bool exempt() const noexcept { return tag != BlockTag::Other; }
};

/// Priority Complete > CompleteBipartite > Cycle > Other. Expects a block
/// (2-connected, K2 or K1).
BlockClass classify_block(const Graph & block);

/// Lexicographically least triangle.
std::optional<std::array<Vertex, 3>> find_triangle(const Graph & g);

/// A cycle v1..vp (stored 0-based as cycle[0..p-1]) with chord
/// cycle[0]-cycle[chord_index], 2 <= chord_index <= p-2.
struct ChordedCycle {
    std::vector<Vertex> cycle;
    int chord_index = 0;

    Edge chord() const { return {cycle.front(), cycle.at(chord_index)}; }
    int length() const noexcept { return static_cast<int>(cycle.size()); }
};

/// Shortest cycle that has a chord, or none when every cycle is induced.
std::optional<ChordedCycle> find_chorded_cycle(const Graph & g);

/// The per-chord shortest chorded cycles (shortest first) followed by further
/// chorded cycles from exhaustive enumeration, up to `limit` entries in total.
std::vector<ChordedCycle> chorded_cycles(const Graph & g, std::size_t limit);

/// The four ways to read the same cycle and chord as v1..vp with chord v1 v_l:
/// starting at either chord end, walking either direction.
std::array<ChordedCycle, 4> orientations(const ChordedCycle & cc);

struct ThetaSubgraph {
    Vertex u = 0, v = 0;
    /// Three vertex sequences, each starting at u and ending at v.
    std::array<std::vector<Vertex>, 3> paths;

    std::array<int, 3> lengths() const;
    VertexSet vertices(int universe) const;
};

/// Checks disjointness, lengths, that the union forms exactly the θ and,
/// optionally, that it is induced in `host`.
bool is_valid_theta(const Graph & host, const ThetaSubgraph & theta, bool require_induced);

/// Induced θ(1,2,r) around a triangle x,y,z: paths[0] = (y,z), paths[1] =
/// (y,x,z), paths[2] = (y=v0,...,vr=z).
struct TriangleTheta {
    ThetaSubgraph theta;
    Vertex x = 0, y = 0, z = 0;

    const std::vector<Vertex> & long_path() const { return theta.paths[2]; }
};

std::optional<TriangleTheta> find_theta_1_2_r(const Graph & g);

/// Smallest induced θ subgraph (vertex count, then endpoints, then paths).
std::optional<ThetaSubgraph> find_induced_theta(const Graph & g, bool forbid_222, Budget * budget = nullptr);

std::optional<Vertex> find_degree2_vertex(const Graph & g);

struct Contraction {
    Graph graph;
    /// Old vertex -> new vertex.
    std::vector<Vertex> image;
    /// The new vertex [v].
    Vertex merged = 0;
    Vertex center = 0;
    std::array<Vertex, 2> ends{};
};

/// G_v for a degree-2 vertex v whose neighbours are non-adjacent.
Contraction contract_closed_neighborhood(const Graph & g, Vertex v);

}
