#include <listcolor/ulc.hpp>
#include <listcolor/bits.hpp>
#include <listcolor/search.hpp>

#include "log.hpp"

#include <algorithm>
#include <deque>

namespace listcolor {

namespace {

ListAssignment seed_lists_local(const Seed & seed, const Subgraph & sub)
{
    std::vector<ColorSet> lists;
    for (Vertex v : sub.original)
        lists.push_back(seed.lists.at(v));
    return ListAssignment(std::move(lists));
}

Seed map_seed(const Seed & local, const std::vector<Vertex> & original)
{
    Seed out;
    for (auto [v, l] : local.lists)
        out.lists[original[v]] = l;
    for (auto [v, c] : local.coloring)
        out.coloring[original[v]] = c;
    return out;
}

std::string lengths_text(const std::array<int, 3> & l)
{
    return "(" + std::to_string(l[0]) + "," + std::to_string(l[1]) + "," + std::to_string(l[2]) + ")";
}

bool is_222(std::array<int, 3> l)
{
    return l[0] == 2 && l[1] == 2 && l[2] == 2;
}

struct LocalSolution {
    ListAssignment lists;
    Coloring coloring;
};

/// The θ(2,2,4) lists read off the drawing: endpoints {1,2}->1 and {1,3}->3,
/// the two middle vertices {1,2}->2 and {2,3}->2, the long path {1,2}->2,
/// {2,3}->3, {1,3}->1 from u towards v.
LocalSolution theta_224(const Graph & g, const ThetaSubgraph & th)
{
    std::vector<ColorSet> lists(g.order());
    std::vector<Color> color(g.order(), 0);
    auto put = [&](Vertex v, ColorSet l, Color c) {
        lists[v] = l;
        color[v] = c;
    };
    put(th.u, {1, 2}, 1);
    put(th.v, {1, 3}, 3);
    bool first_short = true;
    for (const auto & p : th.paths) {
        if (p.size() == 3) {
            if (first_short)
                put(p[1], {1, 2}, 2);
            else
                put(p[1], {2, 3}, 2);
            first_short = false;
        }
        else {
            put(p[1], {1, 2}, 2);
            put(p[2], {2, 3}, 3);
            put(p[3], {1, 3}, 1);
        }
    }
    return {ListAssignment(std::move(lists)), Coloring(std::move(color))};
}

LocalSolution solve_theta_local(const Graph & g, const ThetaSubgraph & th, std::vector<std::string> * steps)
{
    auto lengths = th.lengths();
    auto sorted = lengths;
    std::sort(sorted.begin(), sorted.end());

    if (sorted[0] == 1) {
        int one = static_cast<int>(std::find(lengths.begin(), lengths.end(), 1) - lengths.begin());
        const auto & a = th.paths[(one + 1) % 3];
        const auto & b = th.paths[(one + 2) % 3];
        ChordedCycle cc;
        cc.cycle.assign(a.begin(), a.end());
        for (auto it = b.rbegin() + 1; it + 1 != b.rend(); ++it)
            cc.cycle.push_back(*it);
        cc.chord_index = static_cast<int>(a.size()) - 1;
        for (const ChordedCycle & o : orientations(cc)) {
            auto seed = chorded_cycle_seed(g, o, 3);
            if (!seed)
                continue;
            std::vector<ColorSet> lists(g.order());
            std::vector<Color> color(g.order(), 0);
            for (auto [v, l] : seed->lists)
                lists[v] = l;
            for (auto [v, c] : seed->coloring)
                color[v] = c;
            LocalSolution sol{ListAssignment(std::move(lists)), Coloring(std::move(color))};
            if (count_list_colorings(g, sol.lists, 2) == 1) {
                if (steps)
                    steps->push_back("theta" + lengths_text(lengths) + ": chorded-cycle seed");
                return sol;
            }
        }
        throw std::logic_error("no chorded-cycle seed verified on theta" + lengths_text(lengths));
    }

    if (sorted == std::array<int, 3>{2, 2, 4}) {
        if (steps)
            steps->push_back("theta(2,2,4): base assignment");
        return theta_224(g, th);
    }

    if (is_222(sorted))
        throw NotUniquelyColorable("theta(2,2,2) = K(2,3) is not uniquely 2-list colourable");

    int longest = static_cast<int>(std::max_element(lengths.begin(), lengths.end()) - lengths.begin());
    const auto & path = th.paths[longest];
    Vertex w = path[lengths[longest] / 2];
    Contraction ct = contract_closed_neighborhood(g, w);

    ThetaSubgraph smaller;
    smaller.u = ct.image[th.u];
    smaller.v = ct.image[th.v];
    for (int s = 0; s < 3; ++s)
        for (Vertex x : th.paths[s]) {
            Vertex y = ct.image[x];
            if (smaller.paths[s].empty() || smaller.paths[s].back() != y)
                smaller.paths[s].push_back(y);
        }
    if (steps)
        steps->push_back("theta" + lengths_text(lengths) + ": contract vertex " + std::to_string(w) + " -> theta"
            + lengths_text(smaller.lengths()));
    LocalSolution inner = solve_theta_local(ct.graph, smaller, steps);
    auto [lists, coloring] = gv_lift(g, ct, inner.lists, inner.coloring);
    if (count_list_colorings(g, lists, 2) != 1)
        throw std::logic_error("lifted theta assignment is not uniquely colourable");
    return {std::move(lists), std::move(coloring)};
}

/// Colours the rest of g block by block, each new block pinned at the single
/// cut vertex it shares with the already-coloured part.
std::optional<Coloring> extend_across_blocks(const Graph & g, const BlockDecomposition & dec, Coloring partial, int t,
    Budget * budget)
{
    std::vector<char> done(dec.blocks.size(), 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t b = 0; b < dec.blocks.size(); ++b) {
            if (done[b])
                continue;
            auto members = dec.blocks[b].members();
            std::vector<Vertex> coloured;
            for (Vertex v : members)
                if (partial[v])
                    coloured.push_back(v);
            if (coloured.size() == members.size()) {
                done[b] = 1;
                continue;
            }
            if (coloured.empty())
                continue;
            Subgraph sub = induced_subgraph(g, dec.blocks[b]);
            auto local = sub.local_index(g.order());
            ColorConstraints cons;
            for (Vertex v : coloured)
                cons.fixed[local[v]] = partial[v];
            auto c = find_coloring(sub.graph, t, cons, budget);
            if (!c)
                return std::nullopt;
            for (std::size_t i = 0; i < sub.original.size(); ++i)
                partial[sub.original[i]] = (*c)[static_cast<Vertex>(i)];
            done[b] = 1;
            progress = true;
        }
    }
    for (Color c : partial.color)
        if (!c)
            return std::nullopt;
    return partial;
}

class Synthesizer {
public:
    Synthesizer(const Graph & g, const SynthesisOptions & options) :
        g_(g),
        options_(options)
    {
    }

    SynthesisCertificate run()
    {
        t_ = std::max(3, chromatic_number(g_, options_.budget));
        step("palette", "t = max{3, chi} = " + std::to_string(t_));
        dec_ = block_decomposition(g_);

        if (options_.seed_case != SeedCase::Fallback)
            for (const VertexSet & block : dec_.blocks) {
                Subgraph b = induced_subgraph(g_, block);
                if (classify_block(b.graph).exempt())
                    continue;
                step("block", "non-exempt block", b.original);
                if (auto cert = from_block(b))
                    return *cert;
            }
        return fallback();
    }

    std::vector<TraceStep> & trace() { return trace_; }

private:
    void step(std::string kind, std::string detail, std::vector<Vertex> vertices = {})
    {
        trace_.push_back({std::move(kind), std::move(detail), std::move(vertices)});
    }

    bool allowed(SeedCase c) const { return options_.seed_case == SeedCase::Auto || options_.seed_case == c; }

    std::optional<SynthesisCertificate> from_block(const Subgraph & b)
    {
        Graph star = gstar_closure(b.graph, t_, ClosureMode::FixedPoint, options_.budget);
        step("closure", "G* at t=" + std::to_string(t_) + " added " + std::to_string(star.size() - b.graph.size())
            + " edge(s)", b.original);

        auto attempt = [&](const Seed & local, const std::string & route, std::vector<std::string> notes = {}) {
            return try_seed(b, star, local, route, notes);
        };

        bool has_triangle = find_triangle(star).has_value();
        if (has_triangle && allowed(SeedCase::Triangle))
            if (auto tt = find_theta_1_2_r(star))
                if (auto seed = triangle_theta_seed(star, *tt, t_, options_.budget))
                    if (auto cert = attempt(*seed, "triangle"))
                        return cert;

        if (allowed(SeedCase::Chord) && find_chorded_cycle(star))
            for (const ChordedCycle & cc : chorded_cycles(star, 256))
                for (const ChordedCycle & o : orientations(cc))
                    if (auto seed = chorded_cycle_seed(star, o, t_, options_.budget))
                        if (auto cert = attempt(*seed, "chord"))
                            return cert;

        if (allowed(SeedCase::Theta))
            if (auto th = find_induced_theta(star, true, options_.budget)) {
                std::vector<std::string> notes;
                Seed seed = theta_seed(star, *th, &notes);
                if (auto cert = attempt(seed, "theta", notes))
                    return cert;
            }

        if (allowed(SeedCase::I2))
            if (auto pat = find_i2_pattern(star))
                if (auto cert = attempt(case_i2_seed(star, pat->v, pat->v1, pat->v2, pat->v3, pat->u1, pat->u2), "i2"))
                    return cert;
        return std::nullopt;
    }

    std::optional<SynthesisCertificate> try_seed(const Subgraph & b, const Graph & star, const Seed & local,
        const std::string & route, const std::vector<std::string> & notes)
    {
        VertexSet seed_set = local.vertices(star.order());
        Subgraph seed_sub = induced_subgraph(star, seed_set);
        if (count_list_colorings(seed_sub.graph, seed_lists_local(local, seed_sub), 2, options_.budget) != 1)
            return std::nullopt;

        ColorConstraints cons;
        cons.fixed = local.coloring;
        auto block_coloring = find_coloring(star, t_, cons, options_.budget);
        if (!block_coloring)
            return std::nullopt;
        Coloring partial(std::vector<Color>(g_.order(), 0));
        for (std::size_t i = 0; i < b.original.size(); ++i)
            partial[b.original[i]] = (*block_coloring)[static_cast<Vertex>(i)];
        auto full = extend_across_blocks(g_, dec_, partial, t_, options_.budget);
        if (!full)
            return std::nullopt;

        Seed host = map_seed(local, b.original);
        ListAssignment lists = extend_seed(g_, host, *full);
        if (!lists.uniform(2) || lists.palette_size() != t_)
            return std::nullopt;
        if (count_list_colorings(g_, lists, 2, options_.budget) != 1)
            return std::nullopt;

        for (const auto & n : notes)
            step("theta", n);
        step("seed:" + route, std::to_string(host.lists.size()) + " seed vertices", seed_set_host(host));
        step("extend", "BFS forest from seed over " + std::to_string(g_.order() - static_cast<int>(host.lists.size()))
            + " vertices");
        SynthesisCertificate cert;
        cert.assignment = std::move(lists);
        cert.unique_coloring = *full;
        cert.t = t_;
        cert.route = route;
        return cert;
    }

    static std::vector<Vertex> seed_set_host(const Seed & s)
    {
        std::vector<Vertex> out;
        for (auto & [v, l] : s.lists)
            out.push_back(v);
        return out;
    }

    SynthesisCertificate fallback()
    {
        log().info("synthesis falling back to exhaustive (2,{}) search on {} vertices", t_, g_.order());
        step("fallback", "exhaustive search for a (2," + std::to_string(t_) + ")-assignment");
        UniquenessProbe probe = is_uniquely_k_t(g_, 2, t_, {options_.budget, options_.jobs});
        if (!probe.witness) {
            if (!probe.exhausted)
                throw BudgetExceeded("budget exhausted during fallback search");
            throw std::logic_error("exhaustive search found no (2,t)-assignment for a uniquely 2-list colourable graph");
        }
        SynthesisCertificate cert;
        cert.assignment = *probe.witness;
        cert.unique_coloring = *probe.coloring;
        cert.t = t_;
        cert.route = "fallback";
        return cert;
    }

    const Graph & g_;
    SynthesisOptions options_;
    int t_ = 0;
    BlockDecomposition dec_;
    std::vector<TraceStep> trace_;
};

}

std::vector<BlockReport> block_report(const Graph & g)
{
    std::vector<BlockReport> out;
    for (const VertexSet & block : block_decomposition(g).blocks) {
        Subgraph sub = induced_subgraph(g, block);
        BlockClass cls = classify_block(sub.graph);
        for (auto * part : {&cls.part_a, &cls.part_b, &cls.cycle_order})
            for (Vertex & v : *part)
                v = sub.original[v];
        out.push_back({block, std::move(cls)});
    }
    return out;
}

bool is_u2lc(const Graph & g)
{
    auto blocks = block_report(g);
    for (const VertexSet & comp : connected_components(g)) {
        bool found = false;
        for (const BlockReport & b : blocks)
            if (!b.cls.exempt() && (b.vertices.bits() & comp.bits()))
                found = true;
        if (!found)
            return false;
    }
    return true;
}

VertexSet Seed::vertices(int universe) const
{
    VertexSet s(universe);
    for (auto & [v, l] : lists)
        s.insert(v);
    return s;
}

ListAssignment spanning_tree_assignment(const Graph & g, Vertex v0, const Coloring & c)
{
    if (!is_connected(g))
        throw std::invalid_argument("spanning-tree assignment needs a connected graph");
    if (v0 < 0 || v0 >= g.order())
        throw std::invalid_argument("root vertex out of range");
    Seed root;
    root.lists[v0] = ColorSet{c[v0]};
    root.coloring[v0] = c[v0];
    return extend_seed(g, root, c);
}

ListAssignment extend_seed(const Graph & g, const Seed & seed, const Coloring & c)
{
    const int n = g.order();
    if (seed.lists.empty())
        throw std::invalid_argument("seed is empty");
    if (c.order() != n || !is_proper(g, c))
        throw std::invalid_argument("extension needs a proper colouring of the whole graph");
    for (Vertex v = 0; v < n; ++v)
        if (c[v] < 1)
            throw std::invalid_argument("colouring leaves vertex " + std::to_string(v) + " uncoloured");
    for (auto & [v, l] : seed.lists) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("seed vertex out of range");
        auto it = seed.coloring.find(v);
        if (it != seed.coloring.end() && it->second != c[v])
            throw std::invalid_argument("colouring disagrees with the seed at vertex " + std::to_string(v));
        if (!l.contains(c[v]))
            throw std::invalid_argument("seed list at vertex " + std::to_string(v) + " misses its colour");
    }

    std::vector<ColorSet> lists(n);
    std::vector<char> reached(n, 0);
    std::deque<Vertex> queue;
    for (auto & [v, l] : seed.lists) {
        lists[v] = l;
        reached[v] = 1;
        queue.push_back(v);
    }
    while (!queue.empty()) {
        Vertex w = queue.front();
        queue.pop_front();
        for_each_bit(g.neighbors(w), [&](int x) {
            if (reached[x])
                return;
            reached[x] = 1;
            lists[x] = ColorSet{c[w], c[x]};
            queue.push_back(x);
        });
    }
    if (std::find(reached.begin(), reached.end(), 0) != reached.end())
        throw std::invalid_argument("seed does not reach every component");
    return ListAssignment(std::move(lists));
}

std::optional<Seed> chorded_cycle_seed(const Graph & gstar, const ChordedCycle & cc, int t, Budget * budget)
{
    const int p = cc.length(), l = cc.chord_index;
    if (p < 4 || l < 2 || l > p - 2 || !gstar.adjacent(cc.cycle[0], cc.cycle[l]))
        return std::nullopt;
    Vertex last = cc.cycle[p - 1], before_chord = cc.cycle[l - 1];
    if (gstar.adjacent(last, before_chord))
        return std::nullopt;
    ColorConstraints cons;
    cons.equal_pairs.push_back({last, before_chord});
    auto c = find_coloring(gstar, t, cons, budget);
    if (!c)
        return std::nullopt;
    Seed seed;
    for (int i = 0; i < p; ++i) {
        Vertex v = cc.cycle[i], prev = cc.cycle[(i + p - 1) % p];
        seed.lists[v] = ColorSet{(*c)[v], (*c)[prev]};
        seed.coloring[v] = (*c)[v];
    }
    return seed;
}

std::optional<Seed> triangle_theta_seed(const Graph & gstar, const TriangleTheta & tt, int t, Budget * budget)
{
    const auto & path = tt.long_path();
    const int r = static_cast<int>(path.size()) - 1;
    if (r < 2)
        return std::nullopt;
    Vertex penultimate = path[r - 1];
    if (gstar.adjacent(tt.x, penultimate))
        return std::nullopt;
    ColorConstraints cons;
    cons.equal_pairs.push_back({tt.x, penultimate});
    auto c = find_coloring(gstar, t, cons, budget);
    if (!c)
        return std::nullopt;
    const Coloring & col = *c;
    Seed seed;
    seed.lists[tt.x] = ColorSet{col[tt.x], col[tt.z]};
    seed.lists[tt.z] = ColorSet{col[tt.x], col[tt.z]};
    seed.lists[tt.y] = ColorSet{col[tt.x], col[tt.y]};
    for (int i = 1; i < r; ++i)
        seed.lists[path[i]] = ColorSet{col[path[i]], col[path[i - 1]]};
    for (auto & [v, l] : seed.lists)
        seed.coloring[v] = col[v];
    return seed;
}

ThetaInstance theta_assignment(int p, int q, int r)
{
    if (is_222({p, q, r}))
        throw NotUniquelyColorable("theta(2,2,2) = K(2,3) is not uniquely 2-list colourable");
    ThetaInstance out;
    out.graph = theta_graph(p, q, r);
    ThetaSubgraph th;
    th.u = 0;
    th.v = 1;
    Vertex next = 2;
    std::array<int, 3> lens{p, q, r};
    for (int s = 0; s < 3; ++s) {
        th.paths[s].push_back(0);
        for (int i = 1; i < lens[s]; ++i)
            th.paths[s].push_back(next++);
        th.paths[s].push_back(1);
    }
    LocalSolution sol = solve_theta_local(out.graph, th, &out.steps);
    out.lists = std::move(sol.lists);
    out.coloring = std::move(sol.coloring);
    return out;
}

Seed theta_seed(const Graph & host, const ThetaSubgraph & theta, std::vector<std::string> * steps)
{
    if (!is_valid_theta(host, theta, true))
        throw std::invalid_argument("theta seed needs an induced theta subgraph");
    auto sorted = theta.lengths();
    std::sort(sorted.begin(), sorted.end());
    if (is_222(sorted))
        throw NotUniquelyColorable("theta(2,2,2) = K(2,3) is not uniquely 2-list colourable");
    Subgraph sub = induced_subgraph(host, theta.vertices(host.order()));
    auto local = sub.local_index(host.order());
    ThetaSubgraph lt;
    lt.u = local[theta.u];
    lt.v = local[theta.v];
    for (int s = 0; s < 3; ++s)
        for (Vertex w : theta.paths[s])
            lt.paths[s].push_back(local[w]);
    LocalSolution sol = solve_theta_local(sub.graph, lt, steps);
    Seed out;
    for (std::size_t i = 0; i < sub.original.size(); ++i) {
        out.lists[sub.original[i]] = sol.lists[static_cast<Vertex>(i)];
        out.coloring[sub.original[i]] = sol.coloring[static_cast<Vertex>(i)];
    }
    return out;
}

std::pair<ListAssignment, Coloring> gv_lift(const Graph & g, const Contraction & ct, const ListAssignment & small_lists,
    const Coloring & small_coloring)
{
    const int n = g.order();
    if (static_cast<int>(ct.image.size()) != n || small_lists.order() != ct.graph.order()
        || small_coloring.order() != ct.graph.order())
        throw std::invalid_argument("contraction mapping does not match the graphs");
    if (ct.center < 0 || ct.center >= n || g.degree(ct.center) != 2)
        throw std::invalid_argument("contraction centre is not a degree-2 vertex of g");
    for (Vertex w : {ct.center, ct.ends[0], ct.ends[1]})
        if (ct.image[w] != ct.merged)
            throw std::invalid_argument("contraction mapping does not merge the closed neighbourhood");
    if ((g.neighbors(ct.center) & ~(bit(ct.ends[0]) | bit(ct.ends[1]))) != 0)
        throw std::invalid_argument("contraction ends are not the neighbours of the centre");

    ColorSet merged_list = small_lists[ct.merged];
    if (merged_list.size() != 2)
        throw std::invalid_argument("lifting needs a 2-element list at the merged vertex");
    Color merged_color = small_coloring[ct.merged];
    std::vector<ColorSet> lists(n);
    std::vector<Color> color(n, 0);
    for (Vertex w = 0; w < n; ++w) {
        if (ct.image[w] < 0 || ct.image[w] >= ct.graph.order())
            throw std::invalid_argument("contraction image out of range");
        lists[w] = small_lists[ct.image[w]];
        color[w] = small_coloring[ct.image[w]];
    }
    color[ct.center] = (merged_list - ColorSet{merged_color}).min();
    return {ListAssignment(std::move(lists)), Coloring(std::move(color))};
}

Seed case_i2_seed(const Graph & g, Vertex v, Vertex v1, Vertex v2, Vertex v3, Vertex u1, Vertex u2)
{
    std::array<Vertex, 6> vs{v, v1, v2, v3, u1, u2};
    Mask all = 0;
    for (Vertex x : vs) {
        if (x < 0 || x >= g.order())
            throw std::invalid_argument("pattern vertex out of range");
        all |= bit(x);
    }
    if (std::popcount(all) != 6)
        throw std::invalid_argument("pattern vertices must be distinct");
    auto expect = [&](Vertex a, Mask nbrs) {
        if ((g.neighbors(a) & all) != nbrs)
            throw std::invalid_argument("vertices do not form the K(2,3)-plus-ear pattern");
    };
    expect(v, bit(v1) | bit(v2));
    expect(v1, bit(v) | bit(u1) | bit(u2));
    expect(v2, bit(v) | bit(u1) | bit(u2));
    expect(v3, bit(u1) | bit(u2));
    expect(u1, bit(v1) | bit(v2) | bit(v3));
    expect(u2, bit(v1) | bit(v2) | bit(v3));

    Seed seed;
    seed.lists[v] = {1, 2};
    seed.lists[v1] = {1, 3};
    seed.lists[v2] = {1, 2};
    seed.lists[v3] = {2, 3};
    seed.lists[u1] = {2, 3};
    seed.lists[u2] = {1, 3};
    Subgraph sub = induced_subgraph(g, VertexSet(g.order(), all));
    auto colorings = list_colorings(sub.graph, seed_lists_local(seed, sub), 2);
    if (colorings.size() != 1)
        throw std::logic_error("pattern lists do not have a unique colouring");
    for (std::size_t i = 0; i < sub.original.size(); ++i)
        seed.coloring[sub.original[i]] = colorings[0][static_cast<Vertex>(i)];
    return seed;
}

std::optional<I2Pattern> find_i2_pattern(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) != 2)
            continue;
        Vertex v1 = std::countr_zero(g.neighbors(v));
        Vertex v2 = std::countr_zero(g.neighbors(v) & ~bit(v1));
        if (g.adjacent(v1, v2))
            continue;
        Mask us = g.neighbors(v1) & g.neighbors(v2) & ~bit(v);
        std::optional<I2Pattern> found;
        for_each_bit(us, [&](int u1) {
            for_each_bit(us & ~((bit(u1) << 1) - 1), [&](int u2) {
                if (found || g.adjacent(u1, u2))
                    return;
                Mask v3s = g.neighbors(u1) & g.neighbors(u2) & ~(bit(v) | bit(v1) | bit(v2) | g.neighbors(v)
                    | g.neighbors(v1) | g.neighbors(v2));
                if (v3s)
                    found = I2Pattern{v, v1, v2, static_cast<Vertex>(std::countr_zero(v3s)), u1, u2};
            });
        });
        if (found)
            return found;
    }
    return std::nullopt;
}

std::optional<SeedCase> parse_seed_case(std::string_view name)
{
    if (name == "auto") return SeedCase::Auto;
    if (name == "triangle") return SeedCase::Triangle;
    if (name == "chord") return SeedCase::Chord;
    if (name == "theta") return SeedCase::Theta;
    if (name == "i2") return SeedCase::I2;
    if (name == "fallback") return SeedCase::Fallback;
    return std::nullopt;
}

std::string to_string(SeedCase c)
{
    switch (c) {
    case SeedCase::Auto: return "auto";
    case SeedCase::Triangle: return "triangle";
    case SeedCase::Chord: return "chord";
    case SeedCase::Theta: return "theta";
    case SeedCase::I2: return "i2";
    case SeedCase::Fallback: return "fallback";
    }
    return "auto";
}

bool verify_certificate(const Graph & g, const SynthesisCertificate & cert, Budget * budget)
{
    if (cert.assignment.order() != g.order() || !cert.assignment.uniform(2))
        return false;
    if (cert.t != cert.assignment.palette_size() || cert.t != std::max(3, chromatic_number(g, budget)))
        return false;
    if (cert.assignment.palette() != ColorSet(((std::uint64_t{2} << cert.assignment.palette_size()) - 1) & ~std::uint64_t{1}))
        return false;
    auto colorings = list_colorings(g, cert.assignment, 2, budget);
    return colorings.size() == 1 && colorings[0] == cert.unique_coloring;
}

SynthesisOutcome synthesize(const Graph & g, const SynthesisOptions & options)
{
    if (!is_u2lc(g))
        return NotU2LC{block_report(g)};

    auto components = connected_components(g);
    SynthesisCertificate cert;
    std::vector<TraceStep> trace;
    try {
        if (components.size() == 1) {
            Synthesizer s(g, options);
            try {
                cert = s.run();
            }
            catch (const BudgetExceeded & e) {
                throw SynthesisBudgetExceeded(e.what(), s.trace());
            }
            cert.trace = std::move(s.trace());
        }
        else {
            std::vector<ColorSet> lists(g.order());
            Coloring coloring(std::vector<Color>(g.order(), 0));
            for (std::size_t i = 0; i < components.size(); ++i) {
                Subgraph sub = induced_subgraph(g, components[i]);
                trace.push_back({"component", "component " + std::to_string(i), sub.original});
                Synthesizer s(sub.graph, options);
                SynthesisCertificate part;
                try {
                    part = s.run();
                }
                catch (const BudgetExceeded & e) {
                    trace.insert(trace.end(), s.trace().begin(), s.trace().end());
                    throw SynthesisBudgetExceeded(e.what(), trace);
                }
                for (TraceStep step : s.trace()) {
                    for (Vertex & v : step.vertices)
                        v = sub.original[v];
                    trace.push_back(std::move(step));
                }
                for (std::size_t j = 0; j < sub.original.size(); ++j) {
                    lists[sub.original[j]] = part.assignment[static_cast<Vertex>(j)];
                    coloring[sub.original[j]] = part.unique_coloring[static_cast<Vertex>(j)];
                }
            }
            cert.assignment = ListAssignment(std::move(lists));
            cert.unique_coloring = std::move(coloring);
            cert.t = cert.assignment.palette_size();
            cert.route = "components";
            cert.disconnected = true;
            cert.trace = std::move(trace);
        }
        cert.verified = verify_certificate(g, cert, options.budget);
    }
    catch (const SynthesisBudgetExceeded &) {
        throw;
    }
    catch (const BudgetExceeded & e) {
        throw SynthesisBudgetExceeded(e.what(), cert.trace);
    }
    cert.trace.push_back({"verify", cert.verified ? "exactly one list colouring" : "verification failed", {}});
    if (!cert.verified)
        throw std::logic_error("synthesised certificate failed verification");
    return cert;
}

}
