#pragma once

#include "ksc/errors.hpp"

#include <atomic>
#include <cstdint>
#include <string>

namespace ksc {

/// Knobs shared by every exhaustive search in the library.
struct SearchOptions {
    std::uint64_t budget = 50'000'000; ///< node-expansion cap per top-level call
    bool parallel = false;
};

/// Counts expansions against a cap; safe to share between worker threads.
class BudgetCounter {
public:
    BudgetCounter(std::uint64_t cap, std::string what) : cap_(cap), what_(std::move(what)) {}

    void tick(std::uint64_t n = 1)
    {
        if (used_.fetch_add(n, std::memory_order_relaxed) + n > cap_)
            throw BudgetExceeded(what_ + ": budget of " + std::to_string(cap_) + " expansions exceeded");
    }

    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

private:
    std::atomic<std::uint64_t> used_{0};
    std::uint64_t cap_;
    std::string what_;
};

} // namespace ksc
