#pragma once

#include <listcolor/graph.hpp>

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace listcolor {

/// Colours are positive integers; 0 means "uncoloured".
using Color = int;

/// Highest colour representable in a ColorSet.
inline constexpr Color kMaxColor = 63;

/// A set of colours in 1..63 stored as a bitmask (bit c for colour c).
class ColorSet {
public:
    constexpr ColorSet() = default;
    constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
    ColorSet(std::initializer_list<Color> colors);

    std::uint64_t bits() const noexcept { return bits_; }
    int size() const noexcept { return std::popcount(bits_); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(Color c) const noexcept { return c >= 1 && c <= kMaxColor && ((bits_ >> c) & 1U); }
    void insert(Color c);
    void erase(Color c) noexcept { if (c >= 1 && c <= kMaxColor) bits_ &= ~(std::uint64_t{1} << c); }
    Color min() const noexcept { return bits_ ? std::countr_zero(bits_) : 0; }
    Color max() const noexcept { return bits_ ? 63 - std::countl_zero(bits_) : 0; }
    std::vector<Color> colors() const;

    ColorSet operator|(ColorSet o) const noexcept { return ColorSet(bits_ | o.bits_); }
    ColorSet operator&(ColorSet o) const noexcept { return ColorSet(bits_ & o.bits_); }
    ColorSet operator-(ColorSet o) const noexcept { return ColorSet(bits_ & ~o.bits_); }

    friend bool operator==(ColorSet, ColorSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// The list assignment L: one colour list per vertex. The list-size profile
/// f and the palette size t are always recomputed from the lists.
class ListAssignment {
public:
    ListAssignment() = default;
    explicit ListAssignment(std::vector<ColorSet> lists) : lists_(std::move(lists)) {}

    int order() const noexcept { return static_cast<int>(lists_.size()); }
    const ColorSet & operator[](Vertex v) const { return lists_.at(v); }
    ColorSet & operator[](Vertex v) { return lists_.at(v); }
    const std::vector<ColorSet> & lists() const noexcept { return lists_; }

    ColorSet palette() const noexcept;
    int palette_size() const noexcept { return palette().size(); }
    std::vector<int> size_profile() const;
    /// True when every list has exactly k colours.
    bool uniform(int k) const noexcept;

    friend bool operator==(const ListAssignment &, const ListAssignment &) = default;
    friend auto operator<=>(const ListAssignment & a, const ListAssignment & b)
    {
        return std::lexicographical_compare_three_way(a.lists_.begin(), a.lists_.end(),
            b.lists_.begin(), b.lists_.end(), [](ColorSet x, ColorSet y) { return compare_lists(x, y); });
    }

    /// Order of sorted colour tuples, e.g. {1,2} < {1,3} < {2,3}.
    static std::strong_ordering compare_lists(ColorSet a, ColorSet b);

private:
    std::vector<ColorSet> lists_;
};

/// A vertex colouring c; colour 0 marks an uncoloured vertex.
struct Coloring {
    std::vector<Color> color;

    Coloring() = default;
    explicit Coloring(std::vector<Color> c) : color(std::move(c)) {}

    int order() const noexcept { return static_cast<int>(color.size()); }
    Color operator[](Vertex v) const { return color.at(v); }
    Color & operator[](Vertex v) { return color.at(v); }
    int colors_used() const;

    friend bool operator==(const Coloring &, const Coloring &) = default;
};

bool is_proper(const Graph & g, const Coloring & c);
/// Proper, within lists, every vertex coloured.
bool is_list_coloring(const Graph & g, const ListAssignment & lists, const Coloring & c);

std::string format_list(ColorSet s);

}
