#include "hbn/core.hpp"

#include <utility>
#include <vector>

#include "hbn/errors.hpp"

namespace hbn {

Num succ(const Num& x, OpStats* stats) {
    if (stats) ++stats->succ_calls;
    if (x.is_zero()) return Num::odd({});  // 0 -> 1
    const Num& t = x.counter();
    const Num& r = x.tail();
    if (x.is_odd()) {
        if (t.is_zero()) {
            if (r.is_zero()) return Num::even({});  // 1 -> 2
            // v(e,[X|Xs]) -> w(succ X, Xs): absorb into the next i-block
            return Num::cons(Kind::w, succ(r.counter(), stats), r.tail());
        }
        // v(T,Xs) -> w(e,[pred T|Xs]): new unit i-block, o-block shrinks
        return Num::cons(Kind::w, Num{},
                         Num::cons(Kind::v, pred(t, stats), r));
    }
    // w node
    if (r.is_zero()) return Num::odd(succ(t, stats));  // w(T,[]) -> v(succ T,[])
    const Num& x0 = r.counter();
    const Num& rr = r.tail();
    if (x0.is_zero()) {
        if (rr.is_zero())  // w(Z,[e]) -> v(Z,[e])
            return Num::cons(Kind::v, t, Num::even({}));
        // w(Z,[e,Y|Ys]) -> v(Z,[succ Y|Ys])
        return Num::cons(Kind::v, t,
                         Num::cons(Kind::w, succ(rr.counter(), stats),
                                   rr.tail()));
    }
    // w(Z,[X|Xs]) with X != e -> v(Z,[e,pred X|Xs])
    return Num::cons(
        Kind::v, t,
        Num::cons(Kind::w, Num{}, Num::cons(Kind::v, pred(x0, stats), rr)));
}

Num pred(const Num& x, OpStats* stats) {
    if (stats) ++stats->pred_calls;
    if (x.is_zero()) throw UnderflowError("pred: zero has no predecessor");
    const Num& t = x.counter();
    const Num& r = x.tail();
    if (x.is_odd()) {
        if (r.is_zero()) {
            if (t.is_zero()) return Num{};         // 1 -> 0
            return Num::even(pred(t, stats));      // v(T,[]) -> w(pred T,[])
        }
        const Num& y0 = r.counter();
        const Num& rr = r.tail();
        if (y0.is_zero()) {
            if (rr.is_zero())  // v(Z,[e]) -> w(Z,[e])
                return Num::cons(Kind::w, t, Num::odd({}));
            // v(Z,[e,X|Xs]) -> w(Z,[succ X|Xs])
            return Num::cons(Kind::w, t,
                             Num::cons(Kind::v, succ(rr.counter(), stats),
                                       rr.tail()));
        }
        // v(Z,[Y|Ys]) with Y != e -> w(Z,[e,pred Y|Ys])
        return Num::cons(
            Kind::w, t,
            Num::cons(Kind::v, Num{},
                      Num::cons(Kind::w, pred(y0, stats), rr)));
    }
    // w node
    if (t.is_zero()) {
        if (r.is_zero()) return Num::odd({});  // 2 -> 1
        // w(e,[P|Xs]) -> v(succ P, Xs)
        return Num::cons(Kind::v, succ(r.counter(), stats), r.tail());
    }
    // w(T,Xs) with T != e -> v(e,[pred T|Xs])
    return Num::cons(Kind::v, Num{},
                     Num::cons(Kind::w, pred(t, stats), r));
}

Num apply_o(const Num& x, OpStats* stats) {
    if (x.is_zero()) return Num::odd({});
    if (x.is_even_positive()) return Num::cons(Kind::v, Num{}, x);
    return Num::cons(Kind::v, succ(x.counter(), stats), x.tail());
}

Num apply_i(const Num& x, OpStats* stats) {
    if (x.is_zero()) return Num::even({});
    if (x.is_odd()) return Num::cons(Kind::w, Num{}, x);
    return Num::cons(Kind::w, succ(x.counter(), stats), x.tail());
}

Num unapply_o(const Num& x, OpStats* stats) {
    if (!x.is_odd()) throw DomainError("unapply_o: value is not odd");
    const Num& t = x.counter();
    if (t.is_zero()) return x.tail();
    return Num::cons(Kind::v, pred(t, stats), x.tail());
}

Num unapply_i(const Num& x, OpStats* stats) {
    if (!x.is_even_positive())
        throw DomainError("unapply_i: value is not even positive");
    const Num& t = x.counter();
    if (t.is_zero()) return x.tail();
    return Num::cons(Kind::w, pred(t, stats), x.tail());
}

Natural to_natural(const Num& x, std::uint64_t max_bits) {
    if (x.is_zero()) return 0;
    // Collect (is_i, length) blocks, least significant first, while
    // keeping the running digit total under the budget.
    std::vector<std::pair<bool, std::uint64_t>> blocks;
    Natural total = 0;
    for (const Num* p = &x; p->is_positive(); p = &p->tail()) {
        Natural len = to_natural(p->counter(), max_bits) + 1;
        total += len;
        if (total > max_bits)
            throw ResourceError(
                "to_natural: bitsize exceeds the bit budget of " +
                std::to_string(max_bits));
        blocks.emplace_back(p->is_even_positive(),
                            len.convert_to<std::uint64_t>());
    }
    // Digit j of the bijective expansion is bit j of n+1 (1 = i, 0 = o),
    // below a leading 1 at position bitsize.
    std::uint64_t total_bits = total.convert_to<std::uint64_t>();
    Natural m = Natural(1) << total_bits;
    std::uint64_t j = 0;
    for (auto [bi, len] : blocks) {
        if (bi)
            for (std::uint64_t b = 0; b < len; ++b)
                boost::multiprecision::bit_set(m, static_cast<unsigned>(j + b));
        j += len;
    }
    return m - 1;
}

Num from_natural(const Natural& k) {
    if (k < 0) throw DomainError("from_natural: negative input");
    if (k == 0) return Num{};
    Natural m = k + 1;
    std::uint64_t top = boost::multiprecision::msb(m);
    if (top == 0) return Num{};
    // Run-length encode bits 0..top-1 of m (1 = i digit, 0 = o digit).
    std::vector<std::pair<bool, std::uint64_t>> blocks;
    for (std::uint64_t j = 0; j < top; ++j) {
        bool bi = boost::multiprecision::bit_test(m, static_cast<unsigned>(j));
        if (!blocks.empty() && blocks.back().first == bi)
            ++blocks.back().second;
        else
            blocks.emplace_back(bi, 1);
    }
    // Build the chain from the most significant block down.
    Num chain;
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it)
        chain = Num::cons(it->first ? Kind::w : Kind::v,
                          from_natural(Natural(it->second - 1)),
                          std::move(chain));
    return chain;
}

}  // namespace hbn
