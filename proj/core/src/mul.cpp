#include "hbn/mul.hpp"

#include "hbn/arith.hpp"
#include "hbn/blocks.hpp"
#include "hbn/core.hpp"

namespace hbn {

Num mul(const Num& x, const Num& y) {
    if (x.is_zero() || y.is_zero()) return Num{};
    if (x.is_odd() && y.is_odd()) {
        // o^n(a) * o^m(b) = o^(n+m)(ab+a+b) - o^n(a) - o^m(b)
        BlockView bx = split_o(x);
        BlockView by = split_o(y);
        const Num& a = bx.rest;
        const Num& b = by.rest;
        Num p1 = add(add(a, b), mul(a, b));
        Num k = add(succ(bx.count), succ(by.count));
        return sub(sub(otimes(k, p1), x), y);
    }
    // Even operands reduce through i = succ . o, one digit at a time.
    if (x.is_odd()) return add(x, mul(x, pred(y)));
    if (y.is_odd()) return add(y, mul(pred(x), y));
    Num px = pred(x);
    Num py = pred(y);
    return succ(add(add(px, py), mul(px, py)));
}

}  // namespace hbn
