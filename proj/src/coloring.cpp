#include <listcolor/coloring.hpp>
#include <listcolor/bits.hpp>
#include <listcolor/structure.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace listcolor {

namespace {

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x)
    {
        while (parent_[x] != x)
            x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    void unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

/// Backtracking t-colouring over a quotient graph. Picks the uncoloured class
/// with the fewest remaining colours (ties: most uncoloured neighbours, then
/// lowest index) and tries colours in increasing order.
class ColoringSearch {
public:
    ColoringSearch(std::vector<Mask> adj, int t, std::vector<Color> preset, bool break_symmetry, Budget * budget) :
        adj_(std::move(adj)),
        t_(t),
        color_(std::move(preset)),
        break_symmetry_(break_symmetry),
        budget_(budget)
    {
    }

    bool solve()
    {
        const int q = static_cast<int>(adj_.size());
        std::vector<std::uint64_t> forbidden(q, 0);
        int max_used = 0;
        for (int v = 0; v < q; ++v)
            if (color_[v]) {
                max_used = std::max(max_used, color_[v]);
                for_each_bit(adj_[v], [&](int w) { forbidden[w] |= bit(color_[v]); });
            }
        for (int v = 0; v < q; ++v)
            if (color_[v] && ((forbidden[v] >> color_[v]) & 1U))
                return false;
        return descend(forbidden, max_used);
    }

    const std::vector<Color> & colors() const noexcept { return color_; }

private:
    bool descend(const std::vector<std::uint64_t> & forbidden, int max_used)
    {
        if (budget_)
            budget_->charge();
        const int q = static_cast<int>(adj_.size());
        const std::uint64_t palette = ((std::uint64_t{2} << t_) - 1) & ~std::uint64_t{1};
        int pick = -1, pick_avail = 0, pick_deg = -1;
        Mask uncoloured = 0;
        for (int v = 0; v < q; ++v)
            if (!color_[v])
                uncoloured |= bit(v);
        if (!uncoloured)
            return true;
        for_each_bit(uncoloured, [&](int v) {
            int avail = std::popcount(palette & ~forbidden[v]);
            int deg = std::popcount(adj_[v] & uncoloured);
            if (pick == -1 || avail < pick_avail || (avail == pick_avail && deg > pick_deg)) {
                pick = v;
                pick_avail = avail;
                pick_deg = deg;
            }
        });
        if (pick_avail == 0)
            return false;

        std::uint64_t options = palette & ~forbidden[pick];
        if (break_symmetry_ && max_used + 1 < t_)
            options &= (std::uint64_t{2} << (max_used + 1)) - 1;
        bool found = false;
        for_each_bit(options, [&](int c) {
            if (found)
                return;
            std::vector<std::uint64_t> next = forbidden;
            for_each_bit(adj_[pick], [&](int w) { next[w] |= bit(c); });
            color_[pick] = c;
            if (descend(next, std::max(max_used, c)))
                found = true;
            else
                color_[pick] = 0;
        });
        return found;
    }

    std::vector<Mask> adj_;
    int t_;
    std::vector<Color> color_;
    bool break_symmetry_;
    Budget * budget_;
};

class ListCounter {
public:
    ListCounter(const Graph & g, const ListAssignment & lists, long cap, std::vector<Coloring> * keep, Budget * budget) :
        g_(g),
        lists_(lists),
        cap_(cap),
        keep_(keep),
        budget_(budget),
        color_(g.order(), 0)
    {
    }

    long run()
    {
        descend(g_.all());
        return count_;
    }

private:
    void descend(Mask uncoloured)
    {
        if (budget_)
            budget_->charge();
        if (!uncoloured) {
            ++count_;
            if (keep_)
                keep_->push_back(Coloring(color_));
            return;
        }
        int pick = -1, pick_avail = 0;
        std::uint64_t pick_options = 0;
        Mask pending = uncoloured;
        while (pending) {
            int v = std::countr_zero(pending);
            pending &= pending - 1;
            std::uint64_t used = 0;
            for_each_bit(g_.neighbors(v) & ~uncoloured, [&](int w) { used |= bit(color_[w]); });
            std::uint64_t options = lists_[v].bits() & ~used;
            int avail = std::popcount(options);
            if (avail == 0)
                return;
            if (pick == -1 || avail < pick_avail) {
                pick = v;
                pick_avail = avail;
                pick_options = options;
            }
        }
        for_each_bit(pick_options, [&](int c) {
            if (count_ >= cap_)
                return;
            color_[pick] = c;
            descend(uncoloured & ~bit(pick));
            color_[pick] = 0;
        });
    }

    const Graph & g_;
    const ListAssignment & lists_;
    long cap_;
    std::vector<Coloring> * keep_;
    Budget * budget_;
    std::vector<Color> color_;
    long count_ = 0;
};

void check_lists(const Graph & g, const ListAssignment & lists)
{
    if (lists.order() != g.order())
        throw std::invalid_argument("list assignment covers " + std::to_string(lists.order()) + " vertices, graph has "
            + std::to_string(g.order()));
    for (Vertex v = 0; v < g.order(); ++v)
        if (lists[v].empty())
            throw std::invalid_argument("empty list at vertex " + std::to_string(v));
}

}

std::optional<Coloring> find_coloring(const Graph & g, int t, const ColorConstraints & cons, Budget * budget)
{
    if (t < 1 || t > kMaxColor)
        throw std::invalid_argument("palette size must be in 1..63");
    const int n = g.order();
    DisjointSets sets(n);
    for (auto [a, b] : cons.equal_pairs) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("equal pair vertex out of range");
        if (g.adjacent(a, b))
            throw std::invalid_argument("equal pair " + std::to_string(a) + "," + std::to_string(b) + " is adjacent");
        sets.unite(a, b);
    }
    std::vector<int> cls(n, -1), rep_of(n, -1);
    int q = 0;
    for (Vertex v = 0; v < n; ++v) {
        int r = sets.find(v);
        if (rep_of[r] == -1)
            rep_of[r] = q++;
        cls[v] = rep_of[r];
    }
    std::vector<Mask> adj(q, 0);
    for (auto [a, b] : g.edges()) {
        if (cls[a] == cls[b])
            return std::nullopt;
        adj[cls[a]] |= bit(cls[b]);
        adj[cls[b]] |= bit(cls[a]);
    }
    std::vector<Color> preset(q, 0);
    for (auto [v, c] : cons.fixed) {
        if (v < 0 || v >= n)
            throw std::invalid_argument("fixed vertex out of range");
        if (c < 1 || c > t)
            throw std::invalid_argument("fixed colour " + std::to_string(c) + " outside 1.." + std::to_string(t));
        if (preset[cls[v]] && preset[cls[v]] != c)
            return std::nullopt;
        preset[cls[v]] = c;
    }

    // colour permutation symmetry only holds while no colour is pinned
    ColoringSearch search(std::move(adj), t, std::move(preset), cons.fixed.empty(), budget);
    if (!search.solve())
        return std::nullopt;
    Coloring out(std::vector<Color>(n, 0));
    for (Vertex v = 0; v < n; ++v)
        out[v] = search.colors()[cls[v]];
    return out;
}

int chromatic_number(const Graph & g, Budget * budget)
{
    int lower = g.size() == 0 ? 1 : (find_triangle(g) ? 3 : 2);
    for (int t = lower; t <= g.order(); ++t)
        if (find_coloring(g, t, {}, budget))
            return t;
    return g.order();
}

long count_list_colorings(const Graph & g, const ListAssignment & lists, long cap, Budget * budget)
{
    check_lists(g, lists);
    if (cap < 1)
        throw std::invalid_argument("count cap must be positive");
    return ListCounter(g, lists, cap, nullptr, budget).run();
}

std::vector<Coloring> list_colorings(const Graph & g, const ListAssignment & lists, long cap, Budget * budget)
{
    check_lists(g, lists);
    std::vector<Coloring> out;
    ListCounter(g, lists, cap, &out, budget).run();
    return out;
}

ForcedDistinct forced_distinct(const Graph & g, Vertex u, Vertex v, int t, Budget * budget)
{
    if (u == v || g.adjacent(u, v))
        throw std::invalid_argument("forced_distinct needs two distinct non-adjacent vertices");
    if (!find_coloring(g, t, {}, budget))
        return ForcedDistinct::NoColoring;
    ColorConstraints cons;
    cons.equal_pairs.push_back({u, v});
    return find_coloring(g, t, cons, budget) ? ForcedDistinct::NotForced : ForcedDistinct::Forced;
}

namespace {

std::vector<Edge> forced_pairs(const Graph & g, int t, Budget * budget)
{
    const int n = g.order();
    // pairs already seen sharing a colour in some t-colouring
    std::vector<Mask> shared(n, 0);
    auto absorb = [&](const Coloring & c) {
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b)
                if (a != b && c[a] == c[b])
                    shared[a] |= bit(b);
    };
    std::vector<Edge> forced;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b) || ((shared[a] >> b) & 1U))
                continue;
            ColorConstraints cons;
            cons.equal_pairs.push_back({a, b});
            if (auto c = find_coloring(g, t, cons, budget))
                absorb(*c);
            else
                forced.push_back({a, b});
        }
    return forced;
}

}

Graph gstar_closure(const Graph & g, int t, ClosureMode mode, Budget * budget)
{
    if (!find_coloring(g, t, {}, budget))
        throw std::invalid_argument("closure needs a proper " + std::to_string(t) + "-colouring");
    Graph cur = g;
    while (true) {
        auto add = forced_pairs(cur, t, budget);
        for (auto [a, b] : add)
            cur = cur.with_edge(a, b);
        if (add.empty() || mode == ClosureMode::SinglePass)
            return cur;
    }
}

ReducedInstance reduce_monochromatic_part(const Graph & g, const ListAssignment & lists, const Coloring & c,
    const VertexSet & part, Color i)
{
    const int n = g.order();
    if (part.universe() != n || c.order() != n)
        throw std::invalid_argument("reduction inputs disagree on vertex count");
    if (!is_list_coloring(g, lists, c))
        throw std::invalid_argument("reduction needs c to be an L-colouring");
    if (part.size() == n)
        throw std::invalid_argument("reduction would remove every vertex");
    for (Vertex x : part.members()) {
        if (g.neighbors(x) & part.bits())
            throw std::invalid_argument("monochromatic part is not independent");
        if (c[x] != i)
            throw std::invalid_argument("vertex " + std::to_string(x) + " of the part is not coloured " + std::to_string(i));
    }

    ReducedInstance out;
    out.rest = induced_subgraph(g, part.complement());
    std::vector<ColorSet> reduced;
    for (Vertex v : out.rest.original) {
        ColorSet list = lists[v];
        if (!part.empty()) {
            if (list.size() < 2)
                throw std::invalid_argument("list at vertex " + std::to_string(v) + " too short to reduce");
            if (list.contains(i)) {
                if (c[v] == i)
                    throw std::invalid_argument("vertex " + std::to_string(v) + " outside the part is coloured "
                        + std::to_string(i) + " and would lose its colour");
                list.erase(i);
            }
            else {
                ColorSet droppable = list - ColorSet{c[v]};
                list.erase(droppable.min());
            }
        }
        reduced.push_back(list);
    }
    out.lists = ListAssignment(std::move(reduced));
    return out;
}

}
