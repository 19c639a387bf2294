#pragma once

#include <cstdint>
#include <string>

namespace hbn {

/// Instrumentation counters for the successor-cost statistic. Confined to a
/// single measurement run; operations only touch it through an explicitly
/// passed pointer, so the uninstrumented path stays free of shared state.
struct OpStats {
    std::uint64_t succ_calls = 0;
    std::uint64_t pred_calls = 0;
    std::string op_label;

    std::uint64_t total_calls() const { return succ_calls + pred_calls; }
};

}  // namespace hbn
