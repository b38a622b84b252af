#include <listcolor/graph.hpp>
#include <listcolor/bits.hpp>

#include <algorithm>
#include <sstream>

namespace listcolor {

namespace {

Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1); }

}

ParseError::ParseError(const std::string & what, std::size_t offset) :
    std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
    offset_(offset)
{
}

VertexSet::VertexSet(int universe, Mask bits) :
    universe_(universe),
    bits_(bits)
{
    if (universe < 0 || universe > kMaxVertices)
        throw GraphError("vertex set universe out of range");
    if (bits & ~low_bits(universe))
        throw GraphError("vertex set member outside universe");
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> members)
{
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members)
{
    VertexSet s(universe);
    for (Vertex v : members)
        s.insert(v);
    return s;
}

VertexSet VertexSet::full(int universe) { return VertexSet(universe, low_bits(universe)); }

void VertexSet::insert(Vertex v)
{
    if (v < 0 || v >= universe_)
        throw GraphError("vertex " + std::to_string(v) + " outside universe");
    bits_ |= Mask{1} << v;
}

void VertexSet::erase(Vertex v)
{
    if (v >= 0 && v < universe_)
        bits_ &= ~(Mask{1} << v);
}

std::vector<Vertex> VertexSet::members() const
{
    std::vector<Vertex> out;
    for_each_bit(bits_, [&](int b) { out.push_back(b); });
    return out;
}

VertexSet VertexSet::operator|(const VertexSet & o) const { return VertexSet(std::max(universe_, o.universe_), bits_ | o.bits_); }
VertexSet VertexSet::operator-(const VertexSet & o) const { return VertexSet(universe_, bits_ & ~o.bits_); }
VertexSet VertexSet::operator&(const VertexSet & o) const { return VertexSet(universe_, bits_ & o.bits_); }
VertexSet VertexSet::complement() const { return VertexSet(universe_, low_bits(universe_) & ~bits_); }

Graph::Graph(int n) :
    n_(n)
{
    if (n < 1 || n > kMaxVertices)
        throw GraphError("vertex count must be in [1, 64], got " + std::to_string(n));
    adj_.assign(n, 0);
}

Graph::Graph(int n, std::span<const Edge> edges) :
    Graph(n)
{
    for (auto [u, v] : edges) {
        check_vertex(u);
        check_vertex(v);
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (adjacent(u, v))
            throw GraphError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
        adj_[u] |= Mask{1} << v;
        adj_[v] |= Mask{1} << u;
    }
}

Graph::Graph(int n, std::initializer_list<Edge> edges) :
    Graph(n, std::span<const Edge>(edges.begin(), edges.size()))
{
}

void Graph::check_vertex(Vertex v) const
{
    if (v < 0 || v >= n_)
        throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n_));
}

std::size_t Graph::size() const noexcept
{
    std::size_t twice = 0;
    for (Mask row : adj_)
        twice += std::popcount(row);
    return twice / 2;
}

Mask Graph::all() const noexcept { return low_bits(n_); }

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for_each_bit(adj_[u] & ~low_bits(u + 1), [&](int v) { out.push_back({u, v}); });
    return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw GraphError("cannot add a self-loop");
    if (adjacent(u, v))
        throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    Graph g = *this;
    g.adj_[u] |= Mask{1} << v;
    g.adj_[v] |= Mask{1} << u;
    return g;
}

std::vector<Vertex> Subgraph::local_index(int host_order) const
{
    std::vector<Vertex> idx(host_order, -1);
    for (std::size_t i = 0; i < original.size(); ++i)
        idx[original[i]] = static_cast<Vertex>(i);
    return idx;
}

Graph parse_graph6(std::string_view text)
{
    std::size_t pos = 0;
    if (text.starts_with(">>graph6<<"))
        pos = 10;
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
        text.remove_suffix(1);

    auto byte = [&](std::size_t i) -> int {
        if (i >= text.size())
            throw ParseError("graph6 input truncated", i);
        int c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 character out of range", i);
        return c - 63;
    };

    if (pos >= text.size())
        throw ParseError("empty graph6 input", pos);
    long n = byte(pos);
    ++pos;
    if (n == 63) {
        if (pos < text.size() && text[pos] == '~')
            throw ParseError("graph6 8-byte size form not supported (n > 64)", pos);
        n = 0;
        for (int i = 0; i < 3; ++i)
            n = (n << 6) | byte(pos++);
        if (n > kMaxVertices)
            throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds 64", pos - 3);
    }
    if (n == 0)
        throw ParseError("graph6 encodes the empty graph", pos - 1);

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() - pos < nbytes)
        throw ParseError("graph6 adjacency data truncated", text.size());
    if (text.size() - pos > nbytes)
        throw ParseError("trailing bytes after graph6 adjacency data", pos + nbytes);

    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit) {
            int word = byte(pos + bit / 6);
            if ((word >> (5 - bit % 6)) & 1)
                edges.push_back({i, j});
        }
    if (nbits % 6) {
        int last = byte(pos + nbytes - 1);
        int pad = 6 - static_cast<int>(nbits % 6);
        if (last & ((1 << pad) - 1))
            throw ParseError("nonzero graph6 padding bits", pos + nbytes - 1);
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_graph6(const Graph & g)
{
    std::string out;
    int n = g.order();
    if (n <= 62)
        out.push_back(static_cast<char>(n + 63));
    else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int word = 0, filled = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) {
            word = (word << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(word + 63));
                word = filled = 0;
            }
        }
    if (filled) {
        word <<= 6 - filled;
        out.push_back(static_cast<char>(word + 63));
    }
    return out;
}

namespace {

std::string dot_escape(const std::string & s)
{
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}

std::string to_dot(const Graph & g, const std::map<Vertex, std::string> & labels)
{
    if (!labels.empty())
        for (Vertex v = 0; v < g.order(); ++v)
            if (!labels.contains(v))
                throw GraphError("DOT labels missing vertex " + std::to_string(v));

    std::ostringstream os;
    os << "graph G {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        os << "  " << v;
        if (!labels.empty())
            os << " [label=\"" << dot_escape(labels.at(v)) << "\"]";
        os << ";\n";
    }
    for (auto [u, v] : g.edges())
        os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

int max_degree(const Graph & g)
{
    int best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

std::vector<VertexSet> connected_components(const Graph & g)
{
    std::vector<VertexSet> out;
    Mask seen = 0;
    for (Vertex s = 0; s < g.order(); ++s) {
        if ((seen >> s) & 1U)
            continue;
        Mask comp = Mask{1} << s, frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        seen |= comp;
        out.emplace_back(g.order(), comp);
    }
    return out;
}

bool is_connected(const Graph & g) { return connected_components(g).size() == 1; }

bool is_2connected(const Graph & g)
{
    if (g.order() < 3 || !is_connected(g))
        return false;
    for (Vertex cut = 0; cut < g.order(); ++cut) {
        Mask rest = g.all() & ~(Mask{1} << cut);
        Vertex start = std::countr_zero(rest);
        Mask comp = Mask{1} << start, frontier = comp;
        while (frontier) {
            Mask next = 0;
            for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
            next &= rest;
            frontier = next & ~comp;
            comp |= next;
        }
        if (comp != rest)
            return false;
    }
    return true;
}

Subgraph induced_subgraph(const Graph & g, const VertexSet & s)
{
    if (s.empty())
        throw GraphError("induced subgraph of an empty vertex set");
    Subgraph out;
    out.original = s.members();
    if (out.original.back() >= g.order())
        throw GraphError("vertex set exceeds graph order");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < out.original.size(); ++i)
        for (std::size_t j = i + 1; j < out.original.size(); ++j)
            if (g.adjacent(out.original[i], out.original[j]))
                edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    out.graph = Graph(static_cast<int>(out.original.size()), edges);
    return out;
}

Graph add_edge(const Graph & g, Vertex u, Vertex v) { return g.with_edge(u, v); }

bool is_complete(const Graph & g)
{
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != g.order() - 1)
            return false;
    return true;
}

bool is_cycle(const Graph & g)
{
    if (g.order() < 3 || !is_connected(g))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2)
            return false;
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph & g)
{
    std::vector<int> side(g.order(), -1);
    for (Vertex s = 0; s < g.order(); ++s) {
        if (side[s] != -1)
            continue;
        side[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            bool clash = false;
            for_each_bit(g.neighbors(v), [&](int w) {
                if (side[w] == -1) {
                    side[w] = 1 - side[v];
                    stack.push_back(w);
                }
                else if (side[w] == side[v])
                    clash = true;
            });
            if (clash)
                return std::nullopt;
        }
    }
    return side;
}

Graph complete_graph(int n)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            e.push_back({u, v});
    return Graph(n, e);
}

Graph cycle_graph(int n)
{
    if (n < 3)
        throw GraphError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (Vertex v = 0; v < n; ++v)
        e.push_back({v, (v + 1) % n});
    return Graph(n, e);
}

Graph path_graph(int n)
{
    std::vector<Edge> e;
    for (Vertex v = 0; v + 1 < n; ++v)
        e.push_back({v, v + 1});
    return Graph(n, e);
}

Graph complete_bipartite(int a, int b)
{
    std::vector<Edge> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v)
            e.push_back({u, v});
    return Graph(a + b, e);
}

Graph theta_graph(int p, int q, int r)
{
    if (p < 1 || q < 1 || r < 1)
        throw GraphError("theta path lengths must be positive");
    if ((p == 1) + (q == 1) + (r == 1) > 1)
        throw GraphError("at most one theta path may have length 1");
    int n = 2 + (p - 1) + (q - 1) + (r - 1);
    std::vector<Edge> e;
    Vertex next = 2;
    for (int len : {p, q, r}) {
        Vertex prev = 0;
        for (int i = 1; i < len; ++i) {
            e.push_back({prev, next});
            prev = next++;
        }
        e.push_back({prev, 1});
    }
    return Graph(n, e);
}

}
