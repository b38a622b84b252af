#include <listcolor/search.hpp>

#include "oracles.hpp"

#include <doctest.h>

#include <numeric>
#include <set>

using namespace listcolor;

namespace {

std::vector<ColorSet> k_subsets(int k, int t)
{
    std::vector<ColorSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << t); ++m)
        if (std::popcount(m) == k)
            out.push_back(ColorSet(m << 1));
    std::sort(out.begin(), out.end(), [](ColorSet a, ColorSet b) { return ListAssignment::compare_lists(a, b) < 0; });
    return out;
}

ColorSet permute(ColorSet s, const std::vector<Color> & perm)
{
    ColorSet out;
    for (Color c : s.colors())
        out.insert(perm[c - 1]);
    return out;
}

ListAssignment orbit_min(const ListAssignment & l, int t)
{
    std::vector<Color> perm(t);
    std::iota(perm.begin(), perm.end(), 1);
    ListAssignment best = l;
    do {
        std::vector<ColorSet> image;
        for (ColorSet s : l.lists())
            image.push_back(permute(s, perm));
        ListAssignment cand(image);
        if (cand < best)
            best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

/// All orbit representatives of (k,t)-assignments with palette exactly
/// {1..t}, by generating every assignment and reducing each one.
std::vector<ListAssignment> naive_representatives(int n, int k, int t)
{
    auto subsets = k_subsets(k, t);
    std::set<ListAssignment> reps;
    std::vector<std::size_t> idx(n, 0);
    if (subsets.empty())
        return {};
    std::uint64_t full = ((std::uint64_t{2} << t) - 1) & ~std::uint64_t{1};
    while (true) {
        std::vector<ColorSet> lists;
        for (int v = 0; v < n; ++v)
            lists.push_back(subsets[idx[v]]);
        ListAssignment l(lists);
        if (l.palette().bits() == full)
            reps.insert(orbit_min(l, t));
        int v = 0;
        while (v < n && ++idx[v] == subsets.size())
            idx[v++] = 0;
        if (v == n)
            break;
    }
    return {reps.begin(), reps.end()};
}

/// Least orbit representative with a unique colouring, or none.
std::optional<ListAssignment> naive_unique(const Graph & g, int k, int t)
{
    for (const ListAssignment & l : naive_representatives(g.order(), k, t))
        if (oracle::all_list_colorings(g, l).size() == 1)
            return l;
    return std::nullopt;
}

Graph k4_minus_e()
{
    return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

std::vector<Graph> small_graphs()
{
    std::vector<Graph> out;
    for (const auto & line : oracle::read_lines(std::string(LISTCOLOR_DATA) + "/connected_upto5.g6")) {
        Graph g = parse_graph6(line);
        if (g.order() <= 4)
            out.push_back(g);
    }
    out.push_back(Graph(3));
    out.push_back(Graph(4, {{0, 1}, {2, 3}}));
    return out;
}

}

TEST_CASE("palette lower bound")
{
    CHECK(palette_lower_bound(1, 1) == 1);
    CHECK(palette_lower_bound(1, 3) == 3);
    CHECK(palette_lower_bound(2, 2) == 3);
    CHECK(palette_lower_bound(2, 4) == 4);
    CHECK(palette_lower_bound(3, 2) == 4);
}

TEST_CASE("assignment enumeration examples")
{
    auto one = enumerate_assignments(1, 1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0][0] == ColorSet{1});

    auto two = enumerate_assignments(2, 1, 2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == ListAssignment({{1}, {2}}));

    CHECK(enumerate_assignments(3, 2, 3).size() == naive_representatives(3, 2, 3).size());
    CHECK(enumerate_assignments(2, 2, 5).empty());
    CHECK(enumerate_assignments(2, 3, 2).empty());
}

TEST_CASE("enumeration yields exactly one sorted representative per orbit")
{
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 3; ++k)
            for (int t = k; t <= std::min(k * n, 5); ++t) {
                if (n == 4 && k == 3 && t == 5)
                    continue;
                auto got = enumerate_assignments(n, k, t);
                auto expected = naive_representatives(n, k, t);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(t);
                CHECK(got == expected);
                for (const auto & l : got)
                    CHECK(is_canonical(l));
            }
}

TEST_CASE("canonical test agrees with orbit minimum")
{
    for (const auto & l : naive_representatives(3, 2, 4)) {
        CHECK(is_canonical(l));
        std::vector<ColorSet> swapped;
        for (ColorSet s : l.lists())
            swapped.push_back(permute(s, {2, 1, 3, 4}));
        ListAssignment other(swapped);
        CHECK(is_canonical(other) == (other == l));
    }
}

TEST_CASE("unique colourability probes")
{
    auto k23 = is_uniquely_k_t(complete_bipartite(2, 3), 2, 3);
    CHECK_FALSE(k23.witness);
    CHECK(k23.exhausted);

    auto theta = is_uniquely_k_t(theta_graph(2, 2, 4), 2, 3);
    REQUIRE(theta.witness);
    CHECK(oracle::all_list_colorings(theta_graph(2, 2, 4), *theta.witness).size() == 1);
    CHECK(theta.coloring->color == oracle::all_list_colorings(theta_graph(2, 2, 4), *theta.witness)[0]);

    auto k3 = is_uniquely_k_t(complete_graph(3), 1, 3);
    REQUIRE(k3.witness);
    CHECK(*k3.witness == ListAssignment({{1}, {2}, {3}}));
}

TEST_CASE("probes return the least witness and agree with the naive search")
{
    for (const Graph & g : small_graphs())
        for (int k = 1; k <= 2; ++k)
            for (int t = 1; t <= 4; ++t) {
                auto expected = naive_unique(g, k, t);
                auto got = is_uniquely_k_t(g, k, t);
                CAPTURE(to_graph6(g));
                CAPTURE(k);
                CAPTURE(t);
                CHECK(got.witness == expected);
                CHECK((got.exhausted || got.witness));
            }
}

TEST_CASE("worker count does not change results")
{
    for (const Graph & g : {theta_graph(2, 2, 4), k4_minus_e(), complete_bipartite(2, 3), cycle_graph(5)})
        for (int t : {3, 4}) {
            auto serial = is_uniquely_k_t(g, 2, t, {nullptr, 1});
            auto parallel = is_uniquely_k_t(g, 2, t, {nullptr, 4});
            CHECK(serial.witness == parallel.witness);
            CHECK(serial.exhausted == parallel.exhausted);
        }
}

TEST_CASE("budgets stop the search without a wrong answer")
{
    Budget tiny(5);
    auto p = is_uniquely_k_t(complete_bipartite(2, 3), 2, 4, {&tiny, 1});
    CHECK_FALSE(p.witness);
    CHECK_FALSE(p.exhausted);

    Budget small(5);
    CHECK_THROWS_AS(brute_force_u2lc(complete_bipartite(2, 3), {&small, 1}), BudgetExceeded);

    Budget few(5);
    auto r = chi_u_k(complete_graph(4), 2, 6, {&few, 1});
    CHECK_FALSE(r.exhaustive);
    CHECK(r.t_min == 0);
}

TEST_CASE("chi_u per k")
{
    auto c5 = chi_u_k(cycle_graph(5), 1, 6);
    CHECK(c5.t_min == 3);
    CHECK(c5.exhaustive);

    auto k4 = chi_u_k(complete_graph(4), 2, 8);
    CHECK(k4.t_min == 0);
    CHECK(k4.exhaustive);
    CHECK(k4.t_lo == 3);
    CHECK(k4.t_hi == 8);

    auto th = chi_u_k(theta_graph(2, 2, 4), 2, 6);
    CHECK(th.t_min == 3);
    REQUIRE(th.witness);
    CHECK(th.witness->palette_size() == 3);
}

TEST_CASE("chi_u summaries")
{
    auto k3 = chi_u(complete_graph(3), 2, 6);
    REQUIRE(k3.per_k.size() == 2);
    CHECK(k3.per_k[0].t_min == 3);
    CHECK(k3.per_k[1].t_min == 0);
    CHECK(k3.max_t_min == 3);
    CHECK(k3.lower_bound);

    auto c5 = chi_u(cycle_graph(5), 2, 10);
    CHECK(c5.per_k[0].t_min == 3);
    CHECK(c5.per_k[1].t_min == 0);

    auto p3 = chi_u(path_graph(3), 2, 6);
    CHECK(p3.per_k[0].t_min == 2);
    CHECK(p3.per_k[1].t_min == 0);
    CHECK(p3.max_t_min == 2);

    auto th = chi_u(theta_graph(2, 2, 4), 2, 6);
    CHECK(th.per_k[0].t_min == 2);
    CHECK(th.per_k[1].t_min == 3);
}

TEST_CASE("conjecture reports")
{
    auto k4 = conjecture_check(complete_graph(4), 2);
    CHECK(k4.status == ConjectureStatus::Equality);
    CHECK(k4.delta_plus_1 == 4);
    CHECK(k4.max_t_min == 4);
    CHECK(k4.complete_or_odd_cycle);

    auto c4 = conjecture_check(cycle_graph(4), 2);
    CHECK(c4.status == ConjectureStatus::Consistent);
    CHECK(c4.max_t_min == 2);

    auto th = conjecture_check(theta_graph(2, 2, 4), 2);
    CHECK(th.status == ConjectureStatus::Consistent);
    CHECK(th.max_t_min == 3);

    Budget few(10);
    auto cut = conjecture_check(complete_bipartite(2, 3), 2, {&few, 1});
    CHECK(cut.status == ConjectureStatus::Inconclusive);

    CHECK(to_string(ConjectureStatus::CounterexampleCandidate) == "counterexample-candidate");
}

TEST_CASE("exhaustive unique 2-list colourability")
{
    CHECK_FALSE(brute_force_u2lc(complete_bipartite(2, 3)));
    CHECK(brute_force_u2lc(k4_minus_e()));
    CHECK_FALSE(brute_force_u2lc(cycle_graph(6)));
    CHECK(brute_force_u2lc(theta_graph(2, 2, 4)));
}
