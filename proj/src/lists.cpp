#include <listcolor/lists.hpp>
#include <listcolor/bits.hpp>

#include <stdexcept>

namespace listcolor {

ColorSet::ColorSet(std::initializer_list<Color> colors)
{
    for (Color c : colors)
        insert(c);
}

void ColorSet::insert(Color c)
{
    if (c < 1 || c > kMaxColor)
        throw std::out_of_range("colour " + std::to_string(c) + " outside 1..63");
    bits_ |= std::uint64_t{1} << c;
}

std::vector<Color> ColorSet::colors() const
{
    std::vector<Color> out;
    for_each_bit(bits_, [&](int c) { out.push_back(c); });
    return out;
}

ColorSet ListAssignment::palette() const noexcept
{
    ColorSet all;
    for (ColorSet s : lists_)
        all = all | s;
    return all;
}

std::vector<int> ListAssignment::size_profile() const
{
    std::vector<int> f;
    f.reserve(lists_.size());
    for (ColorSet s : lists_)
        f.push_back(s.size());
    return f;
}

bool ListAssignment::uniform(int k) const noexcept
{
    for (ColorSet s : lists_)
        if (s.size() != k)
            return false;
    return true;
}

std::strong_ordering ListAssignment::compare_lists(ColorSet a, ColorSet b)
{
    std::uint64_t diff = a.bits() ^ b.bits();
    if (!diff)
        return std::strong_ordering::equal;
    int d = std::countr_zero(diff);
    std::uint64_t above = ~((std::uint64_t{2} << d) - 1);
    bool in_a = (a.bits() >> d) & 1U;
    // the set holding d is smaller unless the other set ends before d
    std::uint64_t other = in_a ? b.bits() : a.bits();
    bool other_continues = (other & above) != 0;
    if (in_a)
        return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
}

int Coloring::colors_used() const
{
    std::uint64_t seen = 0;
    for (Color c : color)
        if (c > 0 && c <= kMaxColor)
            seen |= std::uint64_t{1} << c;
    return std::popcount(seen);
}

bool is_proper(const Graph & g, const Coloring & c)
{
    if (c.order() != g.order())
        return false;
    for (auto [u, v] : g.edges())
        if (c[u] != 0 && c[u] == c[v])
            return false;
    return true;
}

bool is_list_coloring(const Graph & g, const ListAssignment & lists, const Coloring & c)
{
    if (lists.order() != g.order() || !is_proper(g, c))
        return false;
    for (Vertex v = 0; v < g.order(); ++v)
        if (!lists[v].contains(c[v]))
            return false;
    return true;
}

std::string format_list(ColorSet s)
{
    std::string out = "{";
    bool first = true;
    for (Color c : s.colors()) {
        if (!first)
            out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

}
