#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>

namespace listcolor {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Node and wall-clock allowance shared by every exhaustive routine of one
/// job. Charging is thread-safe; once exhausted, every further charge throws.
class Budget {
public:
    static constexpr std::uint64_t kDefaultNodes = 100'000'000;

    explicit Budget(std::uint64_t max_nodes = kDefaultNodes,
        std::optional<std::chrono::duration<double>> max_time = std::nullopt);

    static Budget unlimited();

    void charge(std::uint64_t nodes = 1);
    bool exhausted() const noexcept { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t used() const noexcept { return used_.load(std::memory_order_relaxed); }
    std::uint64_t limit() const noexcept { return max_nodes_; }

private:
    [[noreturn]] void fail(const char * why);

    std::uint64_t max_nodes_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

}
