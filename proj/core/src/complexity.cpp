#include "hbn/complexity.hpp"

#include <string>

#include "hbn/arith.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"

namespace hbn {

namespace {

std::uint64_t materialize_count(const Num& k, std::uint64_t budget) {
    if (cmp(k, from_natural(Natural(budget))) == Ordering::gt)
        throw ResourceError("iterate: count exceeds the iteration budget of " +
                            std::to_string(budget));
    return to_natural(k).convert_to<std::uint64_t>();
}

}  // namespace

Num tsize(const Num& x) {
    Num s;
    for (const Num* p = &x; p->is_positive(); p = &p->tail())
        s = succ(add(s, tsize(p->counter())));
    return s;
}

Num iterate(const std::function<Num(const Num&)>& f, const Num& k, Num x,
            std::uint64_t budget) {
    std::uint64_t count = materialize_count(k, budget);
    for (std::uint64_t i = 0; i < count; ++i) x = f(x);
    return x;
}

Num best_case(const Num& k) {
    return iterate([](const Num& x) { return Num::even(x); }, k, Num{});
}

Num worst_case(const Num& k) {
    return iterate([](const Num& x) { return apply_i(apply_o(x)); }, k, Num{});
}

SuccCostReport measure_succ_cost(std::uint64_t range_end,
                                 std::uint64_t budget) {
    if (range_end > budget)
        throw ResourceError(
            "measure_succ_cost: range exceeds the iteration budget of " +
            std::to_string(budget));
    SuccCostReport report;
    report.range = range_end;
    report.stats.op_label = "succ";
    Num x;
    for (std::uint64_t i = 0; i < range_end; ++i) x = succ(x, &report.stats);
    return report;
}

}  // namespace hbn
