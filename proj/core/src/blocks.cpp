#include "hbn/blocks.hpp"

#include "hbn/arith.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"
#include "internal.hpp"

namespace hbn {

Num otimes(const Num& n, const Num& y) {
    if (n.is_zero()) return y;
    if (y.is_odd())  // merge into the leading o-block
        return Num::cons(Kind::v, add(n, y.counter()), y.tail());
    // prepend a new o-block of length n (y is zero or even)
    return Num::cons(Kind::v, pred(n), y);
}

Num itimes(const Num& n, const Num& y) {
    if (n.is_zero()) return y;
    if (y.is_even_positive())
        return Num::cons(Kind::w, add(n, y.counter()), y.tail());
    return Num::cons(Kind::w, pred(n), y);
}

BlockView split_o(const Num& x) {
    if (!x.is_odd()) throw DomainError("split_o: value is not odd");
    return {x.counter(), x.tail()};
}

BlockView split_i(const Num& x) {
    if (!x.is_even_positive())
        throw DomainError("split_i: value is not even positive");
    return {x.counter(), x.tail()};
}

Num oplus(const Num& k, const Num& x, const Num& y) {
    return itimes(k, add(x, y));
}

Num oiplus(const Num& k, const Num& x, const Num& y) {
    return pred(itimes(k, succ(add(x, y))));
}

Num iplus(const Num& k, const Num& x, const Num& y) {
    return pred(pred(itimes(k, succ(succ(add(x, y))))));
}

Num ominus(const Num& k, const Num& x, const Num& y) {
    Ordering r = cmp(x, y);
    if (r == Ordering::eq) return Num{};
    if (r == Ordering::lt)
        throw UnderflowError("ominus: requires x >= y" +
                             detail::operand_note(x, y));
    return succ(otimes(k, pred(sub(x, y))));
}

Num iminus(const Num& k, const Num& x, const Num& y) {
    Ordering r = cmp(x, y);
    if (r == Ordering::eq) return Num{};
    if (r == Ordering::lt)
        throw UnderflowError("iminus: requires x >= y" +
                             detail::operand_note(x, y));
    return succ(otimes(k, pred(sub(x, y))));
}

Num oiminus(const Num& k, const Num& x, const Num& y) {
    Num sy = succ(y);
    Ordering r = cmp(x, sy);
    if (r == Ordering::lt)
        throw UnderflowError("oiminus: requires x >= y+1" +
                             detail::operand_note(x, y));
    if (r == Ordering::eq) return Num::odd({});  // difference is 1
    if (cmp(x, succ(sy)) == Ordering::eq) return succ(exp2(k));  // 2^k + 1
    return succ(succ(otimes(k, pred(pred(sub(x, y))))));
}

Num iominus(const Num& k, const Num& x, const Num& y) {
    if (cmp(x, y) == Ordering::lt)
        throw UnderflowError("iominus: requires x >= y" +
                             detail::operand_note(x, y));
    return otimes(k, sub(x, y));
}

}  // namespace hbn
