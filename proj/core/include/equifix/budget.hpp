#pragma once

#include <vector>

namespace equifix {

/// Branch counter shared by the enumeration engines. Every search node
/// consumed calls tick(); once the limit is reached the engines stop
/// extending the search and mark their result incomplete.
class SearchBudget {
public:
    static constexpr long long kDefaultLimit = 10'000'000;

    explicit SearchBudget(long long max_branches = kDefaultLimit)
        : limit_(max_branches) {}

    /// Consume one branch; false once the budget is exhausted.
    bool tick() {
        if (used_ >= limit_)
            return false;
        ++used_;
        return true;
    }

    bool exhausted() const { return used_ >= limit_; }
    long long used() const { return used_; }
    long long limit() const { return limit_; }

private:
    long long limit_;
    long long used_ = 0;
};

/// Enumeration output plus a completeness flag; complete = false means the
/// search budget ran out and items is only a partial list.
template <typename T>
struct EnumResult {
    std::vector<T> items;
    bool complete = true;
};

}  // namespace equifix
