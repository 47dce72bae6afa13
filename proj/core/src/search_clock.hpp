// search_clock.hpp -- node counter with a wall-clock budget (internal)

#pragma once

#include <chrono>
#include <cstdint>

namespace magicsq::detail {

/// Thrown out of a search when its budget expires; never escapes the library.
struct BudgetHit
{
};

/// Thrown when a restart's node allowance runs out.
struct CutoffHit
{
};

class SearchClock
{
public:
    explicit SearchClock(std::chrono::milliseconds budget)
        : limited_(budget.count() > 0), deadline_(std::chrono::steady_clock::now() + budget)
    {
    }

    void tick()
    {
        if (++nodes_ >= cutoff_) {
            throw CutoffHit{};
        }
        if ((nodes_ & 0x3ff) == 0) {
            check();
        }
    }

    /// Allow `nodes` more ticks before CutoffHit.
    void set_cutoff(std::uint64_t nodes) { cutoff_ = nodes_ + nodes; }
    void clear_cutoff() { cutoff_ = UINT64_MAX; }

    void check() const
    {
        if (limited_ && std::chrono::steady_clock::now() >= deadline_) {
            throw BudgetHit{};
        }
    }

    std::uint64_t nodes() const noexcept { return nodes_; }

private:
    bool limited_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    std::uint64_t cutoff_ = UINT64_MAX;
};

}  // namespace magicsq::detail
