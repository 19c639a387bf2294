#pragma once

#include <cstdint>
#include <functional>

#include "hbn/stats.hpp"
#include "hbn/tree.hpp"

namespace hbn {

inline constexpr std::uint64_t default_iteration_budget = 1u << 26;

/// Structural complexity: node count of the tree, root excluded. Never
/// exceeds bitsize and is the actual cost driver of the block algorithms.
Num tsize(const Num& x);

/// Apply f k times to x. k is materialized as a machine count internally;
/// throws ResourceError past `budget` iterations.
Num iterate(const std::function<Num(const Num&)>& f, const Num& k, Num x,
            std::uint64_t budget = default_iteration_budget);

/// Minimal structural complexity for its magnitude: k-fold nesting of
/// w(.,[]), denoting 2^2^...^2 - 2 (a tower k tall, minus 2).
/// tsize(best_case(t(k))) denotes k.
Num best_case(const Num& k);

/// Maximal structural complexity for its bitsize: k alternating unit
/// blocks i(o(.)), denoting 4(4^k-1)/3.
Num worst_case(const Num& k);

/// Result of an instrumented successor sweep.
struct SuccCostReport {
    std::uint64_t range = 0;
    OpStats stats;

    /// Mean number of succ/pred primitive invocations per top-level succ.
    /// Every invocation is counted, the top-level one included.
    double average() const {
        return range == 0 ? 0.0
                          : static_cast<double>(stats.total_calls()) /
                                static_cast<double>(range);
    }
};

/// Run succ over 0..range_end-1 with instrumented counting.
SuccCostReport measure_succ_cost(std::uint64_t range_end,
                                 std::uint64_t budget = default_iteration_budget);

}  // namespace hbn
