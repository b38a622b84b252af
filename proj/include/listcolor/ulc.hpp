#pragma once

#include <listcolor/budget.hpp>
#include <listcolor/coloring.hpp>
#include <listcolor/graph.hpp>
#include <listcolor/lists.hpp>
#include <listcolor/structure.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace listcolor {

/// The graph (or requested θ) admits no 2-list assignment with a unique
/// list colouring.
class NotUniquelyColorable : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BlockReport {
    VertexSet vertices;
    BlockClass cls;
};

std::vector<BlockReport> block_report(const Graph & g);

/// Uniquely 2-list colourable iff some block is none of complete, complete
/// bipartite or cycle. Disconnected graphs need this in every component.
bool is_u2lc(const Graph & g);

/// Lists and colours on a subset of the host's vertices, keyed by host vertex.
struct Seed {
    std::map<Vertex, ColorSet> lists;
    std::map<Vertex, Color> coloring;

    VertexSet vertices(int universe) const;
};

/// Spanning-tree assignment: {c(v0)} at the root, {c(parent), c(v)} elsewhere.
ListAssignment spanning_tree_assignment(const Graph & g, Vertex v0, const Coloring & c);

/// Keeps the seed lists and gives every other vertex {c(parent), c(v)} along a
/// BFS forest grown from the seed.
ListAssignment extend_seed(const Graph & g, const Seed & seed, const Coloring & c);

/// Cyclic-shift lists L(v_i) = {c(v_i), c(v_{i-1})} around a chorded cycle,
/// for a t-colouring with c(v_p) = c(v_{l-1}).
std::optional<Seed> chorded_cycle_seed(const Graph & gstar, const ChordedCycle & cc, int t, Budget * budget = nullptr);

/// Lists around an induced θ(1,2,r) for a t-colouring with c(x) = c(v_{r-1}).
std::optional<Seed> triangle_theta_seed(const Graph & gstar, const TriangleTheta & tt, int t, Budget * budget = nullptr);

struct ThetaInstance {
    Graph graph;
    ListAssignment lists;
    Coloring coloring;
    std::vector<std::string> steps;
};

/// θ(p,q,r) in canonical vertex order with a verified (2,3)-assignment.
/// Throws NotUniquelyColorable for θ(2,2,2).
ThetaInstance theta_assignment(int p, int q, int r);

/// Same construction on an induced θ of a host graph, keyed by host vertex.
Seed theta_seed(const Graph & host, const ThetaSubgraph & theta, std::vector<std::string> * steps = nullptr);

/// Lifts an assignment on G_v back to G: the three merged vertices all get
/// L([v]); v takes the colour of L([v]) its neighbours do not.
std::pair<ListAssignment, Coloring> gv_lift(const Graph & g, const Contraction & contraction,
    const ListAssignment & small_lists, const Coloring & small_coloring);

/// The six fixed lists of the K(2,3)-plus-ear pattern; its unique colouring
/// is found by enumeration.
Seed case_i2_seed(const Graph & g, Vertex v, Vertex v1, Vertex v2, Vertex v3, Vertex u1, Vertex u2);

struct I2Pattern {
    Vertex v, v1, v2, v3, u1, u2;
};

std::optional<I2Pattern> find_i2_pattern(const Graph & g);

enum class SeedCase { Auto, Triangle, Chord, Theta, I2, Fallback };

std::optional<SeedCase> parse_seed_case(std::string_view name);
std::string to_string(SeedCase c);

struct TraceStep {
    std::string kind;
    std::string detail;
    std::vector<Vertex> vertices;
};

struct SynthesisCertificate {
    ListAssignment assignment;
    Coloring unique_coloring;
    std::vector<TraceStep> trace;
    int t = 0;
    /// Which construction produced the lists: triangle, chord, theta, i2,
    /// fallback, or components for disconnected input.
    std::string route;
    bool disconnected = false;
    bool verified = false;
};

struct NotU2LC {
    std::vector<BlockReport> blocks;
};

using SynthesisOutcome = std::variant<SynthesisCertificate, NotU2LC>;

struct SynthesisOptions {
    Budget * budget = nullptr;
    SeedCase seed_case = SeedCase::Auto;
    int jobs = 1;
};

/// Budget ran out during synthesis; carries the steps taken so far.
class SynthesisBudgetExceeded : public BudgetExceeded {
public:
    SynthesisBudgetExceeded(const std::string & what, std::vector<TraceStep> trace) :
        BudgetExceeded(what),
        trace(std::move(trace))
    {
    }
    std::vector<TraceStep> trace;
};

/// A verified (2, max{3, chi})-assignment with exactly one list colouring, or
/// the block report explaining why none exists.
SynthesisOutcome synthesize(const Graph & g, const SynthesisOptions & options = {});

/// Re-checks a certificate against g: exactly one L-colouring equal to the
/// recorded one, all lists of size 2, palette of size max{3, chi(g)}.
bool verify_certificate(const Graph & g, const SynthesisCertificate & cert, Budget * budget = nullptr);

}
