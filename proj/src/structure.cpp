#include <listcolor/structure.hpp>
#include <listcolor/bits.hpp>

#include <algorithm>
#include <limits>
#include <tuple>

namespace listcolor {

namespace {

class BlockFinder {
public:
    explicit BlockFinder(const Graph & g) :
        g_(g),
        disc_(g.order(), 0),
        low_(g.order(), 0)
    {
    }

    std::vector<Mask> run()
    {
        for (Vertex s = 0; s < g_.order(); ++s) {
            if (disc_[s])
                continue;
            if (g_.degree(s) == 0) {
                disc_[s] = ++timer_;
                blocks_.push_back(bit(s));
                continue;
            }
            visit(s, -1);
        }
        return std::move(blocks_);
    }

private:
    void visit(Vertex u, Vertex parent)
    {
        disc_[u] = low_[u] = ++timer_;
        for_each_bit(g_.neighbors(u), [&](int w) {
            if (!disc_[w]) {
                stack_.push_back({u, w});
                visit(w, u);
                low_[u] = std::min(low_[u], low_[w]);
                if (low_[w] >= disc_[u]) {
                    Mask block = 0;
                    while (true) {
                        Edge e = stack_.back();
                        stack_.pop_back();
                        block |= bit(e.u) | bit(e.v);
                        if (e.u == u && e.v == w)
                            break;
                    }
                    blocks_.push_back(block);
                }
            }
            else if (w != parent && disc_[w] < disc_[u]) {
                stack_.push_back({u, w});
                low_[u] = std::min(low_[u], disc_[w]);
            }
        });
    }

    const Graph & g_;
    std::vector<int> disc_, low_;
    int timer_ = 0;
    std::vector<Edge> stack_;
    std::vector<Mask> blocks_;
};

/// Successive-shortest-path min-cost flow on unit capacities, sized for the
/// vertex-split graphs used to find two disjoint paths.
class UnitFlow {
public:
    explicit UnitFlow(int nodes) : head_(nodes, -1) {}

    void arc(int from, int to, int cost)
    {
        arcs_.push_back({to, head_[from], 1, cost});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[to], 0, -cost});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    bool augment(int source, int sink)
    {
        const int inf = std::numeric_limits<int>::max();
        std::vector<int> dist(head_.size(), inf), via(head_.size(), -1);
        dist[source] = 0;
        for (std::size_t round = 0; round < head_.size(); ++round) {
            bool changed = false;
            for (std::size_t from = 0; from < head_.size(); ++from) {
                if (dist[from] == inf)
                    continue;
                for (int a = head_[from]; a != -1; a = arcs_[a].next)
                    if (arcs_[a].cap > 0 && dist[from] + arcs_[a].cost < dist[arcs_[a].to]) {
                        dist[arcs_[a].to] = dist[from] + arcs_[a].cost;
                        via[arcs_[a].to] = a;
                        changed = true;
                    }
            }
            if (!changed)
                break;
        }
        if (dist[sink] == inf)
            return false;
        for (int node = sink; node != source;) {
            int a = via[node];
            arcs_[a].cap -= 1;
            arcs_[a ^ 1].cap += 1;
            node = arcs_[a ^ 1].to;
        }
        return true;
    }

    /// Forward arcs out of `from` that carry flow.
    std::vector<int> flow_targets(int from) const
    {
        std::vector<int> out;
        for (int a = head_[from]; a != -1; a = arcs_[a].next)
            if ((a % 2) == 0 && arcs_[a].cap == 0)
                out.push_back(arcs_[a].to);
        return out;
    }

private:
    struct Arc {
        int to, next, cap, cost;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

/// Shortest cycle through a and b that avoids the edge ab, as two disjoint
/// a-b paths sorted lexicographically.
std::optional<std::array<std::vector<Vertex>, 2>> two_disjoint_paths(const Graph & g, Vertex a, Vertex b)
{
    const int n = g.order();
    auto in = [](Vertex w) { return 2 * w; };
    auto out = [](Vertex w) { return 2 * w + 1; };
    UnitFlow flow(2 * n);
    for (Vertex w = 0; w < n; ++w)
        if (w != a && w != b)
            flow.arc(in(w), out(w), 0);
    for (auto [x, y] : g.edges()) {
        if ((x == a && y == b) || (x == b && y == a))
            continue;
        flow.arc(out(x), in(y), 1);
        flow.arc(out(y), in(x), 1);
    }
    // a and b are terminals: leaving a starts at out(a), arriving at b ends at in(b)
    if (!flow.augment(out(a), in(b)) || !flow.augment(out(a), in(b)))
        return std::nullopt;

    std::array<std::vector<Vertex>, 2> paths;
    auto first_hops = flow.flow_targets(out(a));
    if (first_hops.size() != 2)
        return std::nullopt;
    for (int i = 0; i < 2; ++i) {
        std::vector<Vertex> & p = paths[i];
        p.push_back(a);
        Vertex cur = first_hops[i] / 2;
        while (cur != b) {
            p.push_back(cur);
            auto next = flow.flow_targets(out(cur));
            cur = next.at(0) / 2;
        }
        p.push_back(b);
    }
    std::sort(paths.begin(), paths.end());
    return paths;
}

ChordedCycle cycle_from_paths(const std::vector<Vertex> & first, const std::vector<Vertex> & second)
{
    ChordedCycle cc;
    cc.cycle.assign(first.begin(), first.end());
    for (auto it = second.rbegin() + 1; it + 1 != second.rend(); ++it)
        cc.cycle.push_back(*it);
    cc.chord_index = static_cast<int>(first.size()) - 1;
    return cc;
}

/// Enumerates simple cycles once each (least vertex first, second vertex
/// smaller than last) and reports every chord reading.
void enumerate_cycles(const Graph & g, std::size_t limit, std::vector<ChordedCycle> & out)
{
    const int n = g.order();
    std::vector<Vertex> path;
    auto emit = [&]() {
        const int p = static_cast<int>(path.size());
        for (int i = 0; i < p && out.size() < limit; ++i)
            for (int j = i + 2; j < p && out.size() < limit; ++j) {
                if (i == 0 && j == p - 1)
                    continue;
                if (!g.adjacent(path[i], path[j]))
                    continue;
                ChordedCycle cc;
                for (int s = 0; s < p; ++s)
                    cc.cycle.push_back(path[(i + s) % p]);
                cc.chord_index = j - i;
                out.push_back(std::move(cc));
            }
    };
    auto extend = [&](auto && self, Vertex start, Mask used) -> void {
        if (out.size() >= limit)
            return;
        Vertex w = path.back();
        for_each_bit(g.neighbors(w), [&](int x) {
            if (out.size() >= limit)
                return;
            if (x == start && path.size() >= 4 && path[1] < path.back())
                emit();
            if (x <= start || ((used >> x) & 1U))
                return;
            path.push_back(x);
            self(self, start, used | bit(x));
            path.pop_back();
        });
    };
    for (Vertex s = 0; s < n && out.size() < limit; ++s) {
        path.assign(1, s);
        extend(extend, s, bit(s));
    }
}

}

BlockDecomposition block_decomposition(const Graph & g)
{
    std::vector<Mask> raw = BlockFinder(g).run();
    std::vector<VertexSet> blocks;
    for (Mask m : raw)
        blocks.emplace_back(g.order(), m);
    std::sort(blocks.begin(), blocks.end(), [](const VertexSet & a, const VertexSet & b) { return a.members() < b.members(); });

    std::vector<int> seen(g.order(), 0);
    for (const VertexSet & b : blocks)
        for (Vertex v : b.members())
            ++seen[v];
    VertexSet cuts(g.order());
    for (Vertex v = 0; v < g.order(); ++v)
        if (seen[v] > 1)
            cuts.insert(v);
    return {std::move(blocks), cuts};
}

std::string to_string(BlockTag tag)
{
    switch (tag) {
    case BlockTag::Complete: return "Complete";
    case BlockTag::CompleteBipartite: return "CompleteBipartite";
    case BlockTag::Cycle: return "Cycle";
    case BlockTag::Other: return "Other";
    }
    return "Other";
}

BlockClass classify_block(const Graph & block)
{
    BlockClass out;
    if (is_complete(block)) {
        out.tag = BlockTag::Complete;
        return out;
    }
    if (auto side = bipartition(block); side && is_connected(block)) {
        for (Vertex v = 0; v < block.order(); ++v)
            ((*side)[v] == 0 ? out.part_a : out.part_b).push_back(v);
        if (block.size() == out.part_a.size() * out.part_b.size()) {
            out.tag = BlockTag::CompleteBipartite;
            return out;
        }
        out.part_a.clear();
        out.part_b.clear();
    }
    if (is_cycle(block)) {
        out.tag = BlockTag::Cycle;
        Vertex prev = 0, cur = std::countr_zero(block.neighbors(0));
        out.cycle_order.push_back(0);
        while (cur != 0) {
            out.cycle_order.push_back(cur);
            Vertex next = std::countr_zero(block.neighbors(cur) & ~bit(prev));
            prev = cur;
            cur = next;
        }
        return out;
    }
    out.tag = BlockTag::Other;
    return out;
}

std::optional<std::array<Vertex, 3>> find_triangle(const Graph & g)
{
    for (Vertex a = 0; a < g.order(); ++a)
        for (Vertex b = a + 1; b < g.order(); ++b) {
            if (!g.adjacent(a, b))
                continue;
            Mask common = g.neighbors(a) & g.neighbors(b) & ~((bit(b) << 1) - 1);
            if (common)
                return std::array<Vertex, 3>{a, b, std::countr_zero(common)};
        }
    return std::nullopt;
}

std::optional<ChordedCycle> find_chorded_cycle(const Graph & g)
{
    std::optional<ChordedCycle> best;
    for (auto [a, b] : g.edges()) {
        auto paths = two_disjoint_paths(g, a, b);
        if (!paths)
            continue;
        ChordedCycle cc = cycle_from_paths((*paths)[0], (*paths)[1]);
        if (!best || cc.length() < best->length())
            best = std::move(cc);
    }
    return best;
}

std::vector<ChordedCycle> chorded_cycles(const Graph & g, std::size_t limit)
{
    std::vector<ChordedCycle> out;
    for (auto [a, b] : g.edges())
        if (auto paths = two_disjoint_paths(g, a, b))
            out.push_back(cycle_from_paths((*paths)[0], (*paths)[1]));
    std::stable_sort(out.begin(), out.end(), [](const ChordedCycle & x, const ChordedCycle & y) { return x.length() < y.length(); });
    if (out.size() > limit)
        out.resize(limit);
    else
        enumerate_cycles(g, limit, out);
    return out;
}

std::array<ChordedCycle, 4> orientations(const ChordedCycle & cc)
{
    const int p = cc.length(), l = cc.chord_index;
    std::array<ChordedCycle, 4> out;
    out[0] = cc;
    out[1].cycle.push_back(cc.cycle[0]);
    for (int i = p - 1; i >= 1; --i)
        out[1].cycle.push_back(cc.cycle[i]);
    out[1].chord_index = p - l;
    for (int i = 0; i < p; ++i)
        out[2].cycle.push_back(cc.cycle[(l + i) % p]);
    out[2].chord_index = p - l;
    for (int i = 0; i < p; ++i)
        out[3].cycle.push_back(cc.cycle[((l - i) % p + p) % p]);
    out[3].chord_index = l;
    return out;
}

std::array<int, 3> ThetaSubgraph::lengths() const
{
    return {static_cast<int>(paths[0].size()) - 1, static_cast<int>(paths[1].size()) - 1,
        static_cast<int>(paths[2].size()) - 1};
}

VertexSet ThetaSubgraph::vertices(int universe) const
{
    VertexSet s(universe);
    for (const auto & p : paths)
        for (Vertex w : p)
            s.insert(w);
    return s;
}

bool is_valid_theta(const Graph & host, const ThetaSubgraph & theta, bool require_induced)
{
    const int n = host.order();
    if (theta.u == theta.v || theta.u < 0 || theta.v < 0 || theta.u >= n || theta.v >= n)
        return false;
    int ones = 0;
    Mask interiors = 0;
    std::vector<Edge> own;
    for (const auto & p : theta.paths) {
        if (p.size() < 2 || p.front() != theta.u || p.back() != theta.v)
            return false;
        if (p.size() == 2)
            ++ones;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] < 0 || p[i] >= n || p[i + 1] < 0 || p[i + 1] >= n || !host.adjacent(p[i], p[i + 1]))
                return false;
            own.push_back({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
        }
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            if (p[i] == theta.u || p[i] == theta.v || ((interiors >> p[i]) & 1U))
                return false;
            interiors |= bit(p[i]);
        }
    }
    if (ones > 1)
        return false;
    if (require_induced) {
        std::vector<Vertex> vs = theta.vertices(n).members();
        std::sort(own.begin(), own.end());
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                if (host.adjacent(vs[i], vs[j]) && !std::binary_search(own.begin(), own.end(), Edge{vs[i], vs[j]}))
                    return false;
    }
    return true;
}

std::optional<TriangleTheta> find_theta_1_2_r(const Graph & g)
{
    if (is_complete(g))
        return std::nullopt;
    std::optional<TriangleTheta> best;
    for (auto [y, z] : g.edges()) {
        Mask common = g.neighbors(y) & g.neighbors(z);
        for_each_bit(common, [&](int x) {
            // shortest y-z path avoiding x, the other neighbours of x, and the edge yz
            Mask allowed = (g.all() & ~(g.neighbors(x) | bit(x))) | bit(y) | bit(z);
            std::vector<Vertex> parent(g.order(), -1);
            std::vector<Vertex> queue{y};
            parent[y] = y;
            for (std::size_t head = 0; head < queue.size() && parent[z] == -1; ++head) {
                Vertex w = queue[head];
                for_each_bit(g.neighbors(w) & allowed, [&](int nx) {
                    if (parent[nx] != -1 || (w == y && nx == z))
                        return;
                    parent[nx] = w;
                    queue.push_back(nx);
                });
            }
            if (parent[z] == -1)
                return;
            std::vector<Vertex> path{z};
            while (path.back() != y)
                path.push_back(parent[path.back()]);
            std::reverse(path.begin(), path.end());
            if (best && path.size() >= best->long_path().size())
                return;
            TriangleTheta tt;
            tt.x = x;
            tt.y = y;
            tt.z = z;
            tt.theta.u = y;
            tt.theta.v = z;
            tt.theta.paths = {std::vector<Vertex>{y, z}, std::vector<Vertex>{y, x, z}, std::move(path)};
            best = std::move(tt);
        });
    }
    return best;
}

namespace {

struct InducedPath {
    std::vector<Vertex> seq;
    Mask interior = 0;
    Mask interior_nbrs = 0;
};

std::vector<InducedPath> induced_paths(const Graph & g, Vertex u, Vertex v, Budget * budget)
{
    std::vector<InducedPath> out;
    std::vector<Vertex> seq{u};
    auto extend = [&](auto && self, Mask on_path) -> void {
        if (budget)
            budget->charge();
        Vertex w = seq.back();
        // an interior vertex next to v must step straight to v
        if (w != u && g.adjacent(w, v)) {
            if ((g.neighbors(v) & on_path & ~bit(w) & ~bit(u)) == 0) {
                InducedPath p;
                p.seq = seq;
                p.seq.push_back(v);
                for (std::size_t i = 1; i < seq.size(); ++i)
                    p.interior |= bit(seq[i]);
                for_each_bit(p.interior, [&](int x) { p.interior_nbrs |= g.neighbors(x); });
                out.push_back(std::move(p));
            }
            return;
        }
        for_each_bit(g.neighbors(w) & ~on_path, [&](int x) {
            if (x == v)
                return;
            if (g.neighbors(x) & on_path & ~bit(w))
                return;
            seq.push_back(x);
            self(self, on_path | bit(x));
            seq.pop_back();
        });
    };
    if (g.adjacent(u, v))
        out.push_back({{u, v}, 0, 0});
    extend(extend, bit(u));
    std::sort(out.begin(), out.end(), [](const InducedPath & a, const InducedPath & b) {
        return a.seq.size() != b.seq.size() ? a.seq.size() < b.seq.size() : a.seq < b.seq;
    });
    return out;
}

}

std::optional<ThetaSubgraph> find_induced_theta(const Graph & g, bool forbid_222, Budget * budget)
{
    std::optional<ThetaSubgraph> best;
    std::size_t best_size = std::numeric_limits<std::size_t>::max();
    for (Vertex u = 0; u < g.order(); ++u) {
        if (g.degree(u) < 3)
            continue;
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (g.degree(v) < 3)
                continue;
            auto paths = induced_paths(g, u, v, budget);
            const std::size_t m = paths.size();
            bool adjacent = g.adjacent(u, v);
            std::size_t pair_best = best_size;
            std::optional<std::array<std::size_t, 3>> pick;
            auto compatible = [&](std::size_t i, std::size_t j) {
                return (paths[i].interior & paths[j].interior) == 0 && (paths[i].interior_nbrs & paths[j].interior) == 0;
            };
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = i + 1; j < m; ++j) {
                    if (!compatible(i, j))
                        continue;
                    for (std::size_t k = j + 1; k < m; ++k) {
                        // paths[0] is the edge uv whenever u and v are adjacent
                        if (adjacent && i != 0)
                            continue;
                        if (!compatible(i, k) || !compatible(j, k))
                            continue;
                        std::size_t size = paths[i].seq.size() + paths[j].seq.size() + paths[k].seq.size() - 4;
                        if (size >= pair_best)
                            continue;
                        if (forbid_222 && paths[i].seq.size() == 3 && paths[j].seq.size() == 3 && paths[k].seq.size() == 3)
                            continue;
                        pair_best = size;
                        pick = std::array<std::size_t, 3>{i, j, k};
                    }
                }
            if (pick && pair_best < best_size) {
                best_size = pair_best;
                ThetaSubgraph t;
                t.u = u;
                t.v = v;
                for (int s = 0; s < 3; ++s)
                    t.paths[s] = paths[(*pick)[s]].seq;
                best = std::move(t);
            }
        }
    }
    return best;
}

std::optional<Vertex> find_degree2_vertex(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) == 2)
            return v;
    return std::nullopt;
}

Contraction contract_closed_neighborhood(const Graph & g, Vertex v)
{
    if (v < 0 || v >= g.order())
        throw GraphError("contraction vertex out of range");
    if (g.degree(v) != 2)
        throw GraphError("contraction requires a degree-2 vertex, vertex " + std::to_string(v) + " has degree "
            + std::to_string(g.degree(v)));
    Vertex a = std::countr_zero(g.neighbors(v));
    Vertex b = std::countr_zero(g.neighbors(v) & ~bit(a));
    if (g.adjacent(a, b))
        throw GraphError("neighbours of vertex " + std::to_string(v) + " are adjacent; contraction would create a loop");

    Contraction out;
    out.center = v;
    out.ends = {a, b};
    Mask merged = bit(v) | bit(a) | bit(b);
    Vertex rep = std::min({v, a, b});
    out.image.assign(g.order(), -1);
    Vertex next = 0;
    for (Vertex w = 0; w < g.order(); ++w) {
        if ((merged >> w) & 1U) {
            if (w == rep)
                out.merged = next++;
            continue;
        }
        out.image[w] = next++;
    }
    for (Vertex w : {v, a, b})
        out.image[w] = out.merged;

    std::vector<Edge> edges;
    for (auto [x, y] : g.edges()) {
        Vertex ix = out.image[x], iy = out.image[y];
        if (ix == iy)
            continue;
        Edge e{std::min(ix, iy), std::max(ix, iy)};
        if (std::find(edges.begin(), edges.end(), e) == edges.end())
            edges.push_back(e);
    }
    out.graph = Graph(next, edges);
    return out;
}

}
