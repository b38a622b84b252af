#pragma once

#include <listcolor/budget.hpp>
#include <listcolor/graph.hpp>
#include <listcolor/lists.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace listcolor {

struct SearchOptions {
    Budget * budget = nullptr;
    /// Worker threads for the assignment stream; results do not depend on it.
    int jobs = 1;
};

/// Least palette size any uniquely (k,t)-list colourable graph can need:
/// max{k+1, chi} for k >= 2 and chi for k = 1.
int palette_lower_bound(int k, int chi);

/// Visits every (k,t)-list assignment on n vertices whose palette is exactly
/// {1..t}, one representative per colour-relabelling orbit (the
/// lexicographically least one), in lexicographic order. Returning false from
/// `visit` stops the walk.
void for_each_assignment(int n, int k, int t, const std::function<bool(const ListAssignment &)> & visit,
    Budget * budget = nullptr);

std::vector<ListAssignment> enumerate_assignments(int n, int k, int t, Budget * budget = nullptr);

/// Lexicographically least under all colour permutations.
bool is_canonical(const ListAssignment & lists);

struct UniquenessProbe {
    std::optional<ListAssignment> witness;
    std::optional<Coloring> coloring;
    /// Every canonical assignment was examined (or a witness was found
    /// without the budget tripping before it).
    bool exhausted = false;
    std::uint64_t assignments = 0;
};

/// First canonical (k,t)-assignment with exactly one list colouring.
UniquenessProbe is_uniquely_k_t(const Graph & g, int k, int t, const SearchOptions & options = {});

struct ChiUResult {
    int k = 0;
    /// Least t with a witness, 0 if none in the searched range.
    int t_min = 0;
    std::optional<ListAssignment> witness;
    int t_lo = 0, t_hi = 0;
    bool exhaustive = true;
};

/// Scans t upwards from palette_lower_bound(k) (k+1 for k >= 2) to t_max,
/// each t independently.
ChiUResult chi_u_k(const Graph & g, int k, int t_max, const SearchOptions & options = {});

struct ChiUSummary {
    std::vector<ChiUResult> per_k;
    int max_t_min = 0;
    /// Always true in practice: k is truncated at k_max.
    bool lower_bound = true;
};

ChiUSummary chi_u(const Graph & g, int k_max, int t_max, const SearchOptions & options = {});

enum class ConjectureStatus { Consistent, Equality, CounterexampleCandidate, Inconclusive };

std::string to_string(ConjectureStatus s);

struct ConjectureReport {
    std::string graph_id;
    int delta_plus_1 = 0;
    std::vector<ChiUResult> per_k;
    /// Searches above delta+1 for k values with no witness up to delta+1.
    std::vector<ChiUResult> probes;
    int max_t_min = 0;
    bool complete_or_odd_cycle = false;
    ConjectureStatus status = ConjectureStatus::Inconclusive;
};

/// chi_u with t_max = delta+1, then probes t in (delta+1, t_probe_max] (default
/// k*n) for each k without a witness.
ConjectureReport conjecture_check(const Graph & g, int k_max, const SearchOptions & options = {},
    std::optional<int> t_probe_max = std::nullopt);

/// Exhaustive search for a (2, max{3, chi})-assignment with a unique colouring.
bool brute_force_u2lc(const Graph & g, const SearchOptions & options = {});

}
