#pragma once

#include <listcolor/budget.hpp>
#include <listcolor/graph.hpp>
#include <listcolor/lists.hpp>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace listcolor {

/// Extra requirements on a t-colouring: pinned colours and pairs of
/// non-adjacent vertices that must share a colour.
struct ColorConstraints {
    std::map<Vertex, Color> fixed;
    std::vector<std::pair<Vertex, Vertex>> equal_pairs;

    bool empty() const noexcept { return fixed.empty() && equal_pairs.empty(); }
};

/// Exact chromatic number by iterative deepening on t.
int chromatic_number(const Graph & g, Budget * budget = nullptr);

/// First proper colouring with colours in 1..t meeting `cons`, under a fixed
/// deterministic search order; none when no such colouring exists.
std::optional<Coloring> find_coloring(const Graph & g, int t, const ColorConstraints & cons = {}, Budget * budget = nullptr);

/// Number of L-colourings, saturating at `cap`.
long count_list_colorings(const Graph & g, const ListAssignment & lists, long cap = 2, Budget * budget = nullptr);

/// All L-colourings (at most `cap` of them), in search order.
std::vector<Coloring> list_colorings(const Graph & g, const ListAssignment & lists, long cap, Budget * budget = nullptr);

enum class ForcedDistinct {
    Forced,
    NotForced,
    /// g has no proper t-colouring, so the question is vacuous.
    NoColoring,
};

ForcedDistinct forced_distinct(const Graph & g, Vertex u, Vertex v, int t, Budget * budget = nullptr);

enum class ClosureMode { FixedPoint, SinglePass };

/// G*: joins every non-adjacent pair that differs in all t-colourings.
/// Throws std::invalid_argument when g has no t-colouring.
Graph gstar_closure(const Graph & g, int t, ClosureMode mode = ClosureMode::FixedPoint, Budget * budget = nullptr);

struct ReducedInstance {
    Subgraph rest;
    /// Lists on rest.graph, indexed by local vertex.
    ListAssignment lists;
};

/// Removes a part X coloured entirely with colour i and shortens every other
/// list by one: drop i when present, otherwise the least colour other than c(v).
ReducedInstance reduce_monochromatic_part(const Graph & g, const ListAssignment & lists, const Coloring & c,
    const VertexSet & part, Color i);

}
