#include <listcolor/budget.hpp>

#include <limits>

namespace listcolor {

Budget::Budget(std::uint64_t max_nodes, std::optional<std::chrono::duration<double>> max_time) :
    max_nodes_(max_nodes)
{
    if (max_time)
        deadline_ = std::chrono::steady_clock::now()
            + std::chrono::duration_cast<std::chrono::steady_clock::duration>(*max_time);
}

Budget Budget::unlimited() { return Budget(std::numeric_limits<std::uint64_t>::max()); }

void Budget::charge(std::uint64_t nodes)
{
    if (exhausted_.load(std::memory_order_relaxed))
        fail("search budget exhausted");
    std::uint64_t before = used_.fetch_add(nodes, std::memory_order_relaxed);
    if (before + nodes > max_nodes_)
        fail("node budget exceeded");
    // clock reads are comparatively slow; sample every 4096 nodes
    if (deadline_ && ((before ^ (before + nodes)) >> 12) != 0 && std::chrono::steady_clock::now() > *deadline_)
        fail("time budget exceeded");
}

void Budget::fail(const char * why)
{
    exhausted_.store(true, std::memory_order_relaxed);
    throw BudgetExceeded(why);
}

}
