#include <listcolor/search.hpp>
#include <listcolor/bits.hpp>
#include <listcolor/coloring.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace listcolor {

namespace {

using Perm = std::vector<std::uint8_t>;

std::uint64_t colors_upto(int m) { return ((std::uint64_t{2} << m) - 1) & ~std::uint64_t{1}; }

/// Depth-first walk over canonical assignments. A prefix survives only while
/// no colour permutation maps it to something lexicographically smaller; the
/// permutations that map it onto itself are carried along as `states`.
class AssignmentWalker {
public:
    struct Frame {
        std::vector<ColorSet> lists;
        int used = 0;
        std::vector<Perm> states;
    };

    AssignmentWalker(int n, int k, int t, Budget * budget) :
        n_(n),
        k_(k),
        t_(t),
        budget_(budget)
    {
        if (n < 1 || k < 1 || t < 1 || t > kMaxColor)
            throw std::invalid_argument("assignment enumeration needs n, k, t >= 1 and t <= 63");
        candidates_.resize(t + 1);
        for (int m = 0; m <= t; ++m) {
            int top = std::min(t, m + k);
            // k-subsets of 1..top whose colours above m are exactly m+1..m+u
            std::vector<int> pick(k);
            auto rec = [&](auto && self, int idx, int from) -> void {
                if (idx == k) {
                    ColorSet s;
                    int fresh = 0;
                    for (int c : pick) {
                        s.insert(c);
                        if (c > m)
                            ++fresh;
                    }
                    if ((s.bits() & ~colors_upto(m)) == (colors_upto(m + fresh) & ~colors_upto(m)))
                        candidates_[m].push_back(s);
                    return;
                }
                for (int c = from; c <= top; ++c) {
                    pick[idx] = static_cast<int>(c);
                    self(self, idx + 1, c + 1);
                }
            };
            if (top >= k)
                rec(rec, 0, 1);
            std::sort(candidates_[m].begin(), candidates_[m].end(),
                [](ColorSet a, ColorSet b) { return ListAssignment::compare_lists(a, b) < 0; });
        }
    }

    Frame root() const
    {
        Frame f;
        f.states.push_back(Perm(t_ + 1, 0));
        return f;
    }

    /// Extends `states` by list `a`; returns false when `a` makes the prefix
    /// non-canonical.
    static bool extend_states(const std::vector<Perm> & states, ColorSet a, int used, std::vector<Perm> & out)
    {
        std::uint64_t old_bits = a.bits() & colors_upto(used);
        ColorSet old(old_bits);
        std::vector<int> fresh = ColorSet(a.bits() & ~old_bits).colors();
        out.clear();
        for (const Perm & p : states) {
            std::uint64_t image = 0;
            for_each_bit(old_bits, [&](int c) { image |= bit(p[c]); });
            auto cmp = ListAssignment::compare_lists(ColorSet(image), old);
            if (cmp < 0)
                return false;
            if (cmp > 0)
                continue;
            std::vector<int> targets = fresh;
            do {
                Perm q = p;
                for (std::size_t i = 0; i < fresh.size(); ++i)
                    q[fresh[i]] = static_cast<std::uint8_t>(targets[i]);
                out.push_back(std::move(q));
            } while (std::next_permutation(targets.begin(), targets.end()));
        }
        return true;
    }

    /// All surviving prefixes of length `depth`, in walk order.
    std::vector<Frame> prefixes(int depth)
    {
        std::vector<Frame> out;
        Frame f = root();
        collect(f, depth, out);
        return out;
    }

    template <typename Visit>
    bool walk(Frame & f, Visit && visit, const std::atomic<bool> * stop = nullptr)
    {
        const int i = static_cast<int>(f.lists.size());
        if (i == n_) {
            if (f.used == t_)
                return visit(f.lists);
            return true;
        }
        std::vector<Perm> next;
        for (ColorSet a : candidates_[f.used]) {
            if (stop && stop->load(std::memory_order_relaxed))
                return false;
            int used = std::max(f.used, a.max());
            if (used + (n_ - i - 1) * k_ < t_)
                continue;
            if (budget_)
                budget_->charge();
            if (!extend_states(f.states, a, f.used, next))
                continue;
            Frame child;
            child.lists = f.lists;
            child.lists.push_back(a);
            child.used = used;
            child.states = std::move(next);
            if (!walk(child, visit, stop))
                return false;
        }
        return true;
    }

private:
    void collect(Frame & f, int depth, std::vector<Frame> & out)
    {
        const int i = static_cast<int>(f.lists.size());
        if (i == depth || i == n_) {
            out.push_back(f);
            return;
        }
        std::vector<Perm> next;
        for (ColorSet a : candidates_[f.used]) {
            int used = std::max(f.used, a.max());
            if (used + (n_ - i - 1) * k_ < t_)
                continue;
            if (!extend_states(f.states, a, f.used, next))
                continue;
            Frame child;
            child.lists = f.lists;
            child.lists.push_back(a);
            child.used = used;
            child.states = std::move(next);
            collect(child, depth, out);
        }
    }

    int n_, k_, t_;
    Budget * budget_;
    std::vector<std::vector<ColorSet>> candidates_;
};

}

int palette_lower_bound(int k, int chi) { return k >= 2 ? std::max(k + 1, chi) : chi; }

void for_each_assignment(int n, int k, int t, const std::function<bool(const ListAssignment &)> & visit, Budget * budget)
{
    if (t < k)
        return;
    AssignmentWalker walker(n, k, t, budget);
    auto f = walker.root();
    walker.walk(f, [&](const std::vector<ColorSet> & lists) { return visit(ListAssignment(lists)); });
}

std::vector<ListAssignment> enumerate_assignments(int n, int k, int t, Budget * budget)
{
    std::vector<ListAssignment> out;
    for_each_assignment(n, k, t, [&](const ListAssignment & l) {
        out.push_back(l);
        return true;
    }, budget);
    return out;
}

bool is_canonical(const ListAssignment & lists)
{
    const int t = lists.palette_size();
    if (lists.palette() != ColorSet(colors_upto(t)))
        return false;
    std::vector<Perm> states{Perm(t + 1, 0)}, next;
    int used = 0;
    for (ColorSet a : lists.lists()) {
        int fresh_top = std::max(used, a.max());
        std::uint64_t fresh = a.bits() & ~colors_upto(used);
        if (fresh != (colors_upto(fresh_top) & ~colors_upto(used)))
            return false;
        if (!AssignmentWalker::extend_states(states, a, used, next))
            return false;
        states.swap(next);
        used = fresh_top;
    }
    return true;
}

UniquenessProbe is_uniquely_k_t(const Graph & g, int k, int t, const SearchOptions & options)
{
    if (k < 1 || t < 1)
        throw std::invalid_argument("k and t must be positive");
    UniquenessProbe probe;
    if (t < k) {
        probe.exhausted = true;
        return probe;
    }
    const int n = g.order();
    AssignmentWalker walker(n, k, t, options.budget);
    const int jobs = std::max(1, options.jobs);

    // Split into contiguous prefix tasks; the lowest-index task holding a
    // witness wins, which is the witness a sequential walk finds first.
    int depth = 0;
    std::vector<AssignmentWalker::Frame> tasks{walker.root()};
    while (jobs > 1 && depth < n && tasks.size() < static_cast<std::size_t>(8 * jobs))
        tasks = walker.prefixes(++depth);

    const std::size_t none = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next_task{0}, best_task{none};
    std::atomic<std::uint64_t> checked{0};
    std::vector<std::optional<ListAssignment>> found(tasks.size());
    std::vector<char> budget_hit(tasks.size(), 0);
    std::atomic<bool> stop_all{false};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&]() {
        while (true) {
            std::size_t idx = next_task.fetch_add(1);
            if (idx >= tasks.size() || idx > best_task.load())
                return;
            std::atomic<bool> stop{false};
            try {
                AssignmentWalker::Frame frame = tasks[idx];
                walker.walk(frame, [&](const std::vector<ColorSet> & lists) {
                    if (idx > best_task.load(std::memory_order_relaxed)) {
                        stop = true;
                        return false;
                    }
                    checked.fetch_add(1, std::memory_order_relaxed);
                    ListAssignment candidate(lists);
                    if (count_list_colorings(g, candidate, 2, options.budget) == 1) {
                        found[idx] = std::move(candidate);
                        std::size_t cur = best_task.load();
                        while (idx < cur && !best_task.compare_exchange_weak(cur, idx)) {
                        }
                        return false;
                    }
                    return true;
                }, &stop);
            }
            catch (const BudgetExceeded &) {
                budget_hit[idx] = 1;
                stop_all = true;
                return;
            }
            catch (...) {
                std::lock_guard lock(error_mutex);
                error = std::current_exception();
                stop_all = true;
                return;
            }
            if (stop_all)
                return;
        }
    };

    if (jobs == 1)
        worker();
    else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
        for (auto & th : pool)
            th.join();
    }
    if (error)
        std::rethrow_exception(error);

    std::size_t best = best_task.load();
    bool hit_before_best = false;
    for (std::size_t i = 0; i < tasks.size() && i < best; ++i)
        hit_before_best = hit_before_best || budget_hit[i];
    probe.assignments = checked.load();
    if (best != none) {
        probe.witness = found[best];
        probe.coloring = list_colorings(g, *probe.witness, 1).at(0);
        probe.exhausted = !hit_before_best;
        int lower = palette_lower_bound(k, chromatic_number(g, options.budget));
        if (t < lower)
            throw std::logic_error("witness uses fewer colours than the palette lower bound");
    }
    else {
        bool any_hit = std::any_of(budget_hit.begin(), budget_hit.end(), [](char c) { return c != 0; });
        probe.exhausted = !any_hit && !stop_all;
    }
    return probe;
}

ChiUResult chi_u_k(const Graph & g, int k, int t_max, const SearchOptions & options)
{
    if (k < 1)
        throw std::invalid_argument("k must be positive");
    ChiUResult r;
    r.k = k;
    r.t_lo = k >= 2 ? k + 1 : chromatic_number(g, options.budget);
    r.t_hi = r.t_lo - 1;
    for (int t = r.t_lo; t <= t_max; ++t) {
        UniquenessProbe probe;
        try {
            probe = is_uniquely_k_t(g, k, t, options);
        }
        catch (const BudgetExceeded &) {
            r.exhaustive = false;
            break;
        }
        if (probe.witness) {
            r.t_hi = t;
            r.t_min = t;
            r.witness = probe.witness;
            r.exhaustive = r.exhaustive && probe.exhausted;
            break;
        }
        if (!probe.exhausted) {
            r.exhaustive = false;
            break;
        }
        r.t_hi = t;
    }
    return r;
}

ChiUSummary chi_u(const Graph & g, int k_max, int t_max, const SearchOptions & options)
{
    if (k_max < 1)
        throw std::invalid_argument("k_max must be positive");
    ChiUSummary s;
    for (int k = 1; k <= k_max; ++k) {
        s.per_k.push_back(chi_u_k(g, k, t_max, options));
        s.max_t_min = std::max(s.max_t_min, s.per_k.back().t_min);
    }
    return s;
}

std::string to_string(ConjectureStatus s)
{
    switch (s) {
    case ConjectureStatus::Consistent: return "consistent";
    case ConjectureStatus::Equality: return "equality";
    case ConjectureStatus::CounterexampleCandidate: return "counterexample-candidate";
    case ConjectureStatus::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

ConjectureReport conjecture_check(const Graph & g, int k_max, const SearchOptions & options, std::optional<int> t_probe_max)
{
    ConjectureReport rep;
    rep.delta_plus_1 = max_degree(g) + 1;
    rep.complete_or_odd_cycle = is_complete(g) || (is_cycle(g) && g.order() % 2 == 1);
    bool inconclusive = false, candidate = false;
    for (int k = 1; k <= k_max; ++k) {
        ChiUResult r = chi_u_k(g, k, rep.delta_plus_1, options);
        inconclusive = inconclusive || !r.exhaustive;
        rep.max_t_min = std::max(rep.max_t_min, r.t_min);
        if (r.t_min == 0 && r.exhaustive) {
            int hi = t_probe_max.value_or(k * g.order());
            ChiUResult probe;
            probe.k = k;
            probe.t_lo = std::max(rep.delta_plus_1 + 1, r.t_lo);
            probe.t_hi = probe.t_lo - 1;
            for (int t = probe.t_lo; t <= hi; ++t) {
                UniquenessProbe p;
                try {
                    p = is_uniquely_k_t(g, k, t, options);
                }
                catch (const BudgetExceeded &) {
                    probe.exhaustive = false;
                    break;
                }
                if (p.witness) {
                    probe.t_hi = t;
                    probe.t_min = t;
                    probe.witness = p.witness;
                    candidate = true;
                    break;
                }
                if (!p.exhausted) {
                    probe.exhaustive = false;
                    break;
                }
                probe.t_hi = t;
            }
            inconclusive = inconclusive || !probe.exhaustive;
            rep.probes.push_back(std::move(probe));
        }
        rep.per_k.push_back(std::move(r));
    }

    bool equality = rep.max_t_min == rep.delta_plus_1;
    if (candidate || rep.max_t_min > rep.delta_plus_1)
        rep.status = ConjectureStatus::CounterexampleCandidate;
    else if (inconclusive)
        rep.status = ConjectureStatus::Inconclusive;
    else if (equality != rep.complete_or_odd_cycle)
        // equality is claimed to characterise complete graphs and odd cycles
        rep.status = ConjectureStatus::CounterexampleCandidate;
    else
        rep.status = equality ? ConjectureStatus::Equality : ConjectureStatus::Consistent;
    return rep;
}

bool brute_force_u2lc(const Graph & g, const SearchOptions & options)
{
    int t = std::max(3, chromatic_number(g, options.budget));
    UniquenessProbe p = is_uniquely_k_t(g, 2, t, options);
    if (!p.witness && !p.exhausted)
        throw BudgetExceeded("brute-force search stopped before exhausting the assignment space");
    return p.witness.has_value();
}

}
