#include "hbn/arith.hpp"

#include <utility>
#include <vector>

#include "hbn/blocks.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"
#include "internal.hpp"

namespace hbn {

namespace {

using TimesFn = Num (*)(const Num&, const Num&);

// One aligned step of the block loop: split both leading blocks and push
// the longer block's excess back onto its remainder, so both sides consume
// a block of the same length k (stored as its counter's successor).
struct Aligned {
    Num k;
    Num x;
    Num y;
};

Aligned align_blocks(const Num& x, const Num& y) {
    const bool xo = x.is_odd();
    const bool yo = y.is_odd();
    BlockView bx = xo ? split_o(x) : split_i(x);
    BlockView by = yo ? split_o(y) : split_i(y);
    TimesFn xt = xo ? otimes : itimes;
    TimesFn yt = yo ? otimes : itimes;
    switch (cmp(bx.count, by.count)) {
        case Ordering::eq:
            return {succ(bx.count), std::move(bx.rest), std::move(by.rest)};
        case Ordering::gt: {
            Num excess = sub(bx.count, by.count);
            return {succ(by.count), xt(excess, bx.rest), std::move(by.rest)};
        }
        case Ordering::lt: {
            Num excess = sub(by.count, bx.count);
            return {succ(bx.count), std::move(bx.rest), yt(excess, by.rest)};
        }
    }
    throw Error("align_blocks: unreachable");
}

}  // namespace

Num add(const Num& x0, const Num& y0) {
    // Iterative block loop with an explicit level stack. Each level applies
    // one fused one-block sum at unwind time:
    //   o^k(a) + o^k(b) = i^k(a+b)                (c = 0 corrections)
    //   o^k(a) + i^k(b) = i^k(a+b+1) - 1          (c = 1)
    //   i^k(a) + i^k(b) = i^k(a+b+2) - 2          (c = 2)
    std::vector<std::pair<Num, int>> levels;
    Num x = x0;
    Num y = y0;
    Num r;
    for (;;) {
        if (x.is_zero()) {
            r = y;
            break;
        }
        if (y.is_zero()) {
            r = x;
            break;
        }
        int c = (x.is_odd() ? 0 : 1) + (y.is_odd() ? 0 : 1);
        Aligned a = align_blocks(x, y);
        levels.emplace_back(std::move(a.k), c);
        x = std::move(a.x);
        y = std::move(a.y);
    }
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        for (int i = 0; i < it->second; ++i) r = succ(r);
        r = itimes(it->first, r);
        for (int i = 0; i < it->second; ++i) r = pred(r);
    }
    return r;
}

namespace {

enum class MinusLevel { oo, oi, io };

}  // namespace

Num sub(const Num& x0, const Num& y0) {
    if (y0.is_zero()) return x0;
    switch (cmp(x0, y0)) {
        case Ordering::lt:
            throw UnderflowError("sub: requires x >= y" +
                                 detail::operand_note(x0, y0));
        case Ordering::eq:
            return Num{};
        case Ordering::gt:
            break;
    }
    // Iterative block loop. x > y holds at every level, which rules out
    // underflow in the fused one-block differences applied at unwind time:
    //   o^k(a) - o^k(b) = o^k(a-b-1) + 1
    //   i^k(a) - i^k(b) = o^k(a-b-1) + 1
    //   o^k(a) - i^k(b) = o^k(a-b-2) + 2   (a-b of 1 or 2 short-circuits)
    //   i^k(a) - o^k(b) = o^k(a-b)
    std::vector<std::pair<Num, MinusLevel>> levels;
    Num x = x0;
    Num y = y0;
    Num r;
    for (;;) {
        if (y.is_zero()) {
            r = x;
            break;
        }
        if (x == y) {
            r = Num{};
            break;
        }
        const bool xo = x.is_odd();
        const bool yo = y.is_odd();
        Aligned a = align_blocks(x, y);
        if (xo && !yo) {
            // The difference inside an o-vs-i level is odd, hence >= 1.
            Num sy = succ(a.y);
            if (a.x == sy) {
                r = Num::odd({});  // difference is 1
                break;
            }
            if (a.x == succ(sy)) {
                r = succ(exp2(a.k));  // 2^k + 1
                break;
            }
            levels.emplace_back(std::move(a.k), MinusLevel::oi);
        } else if (xo == yo) {
            levels.emplace_back(std::move(a.k), MinusLevel::oo);
        } else {
            levels.emplace_back(std::move(a.k), MinusLevel::io);
        }
        x = std::move(a.x);
        y = std::move(a.y);
    }
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
        switch (it->second) {
            case MinusLevel::oo:
                r = succ(otimes(it->first, pred(r)));
                break;
            case MinusLevel::oi:
                r = succ(succ(otimes(it->first, pred(pred(r)))));
                break;
            case MinusLevel::io:
                r = otimes(it->first, r);
                break;
        }
    }
    return r;
}

namespace {

// Machine-word memo values: 0 marks "not computed yet" (never a real memo,
// since only positive values have nodes), UINT64_MAX marks saturation.
constexpr std::uint64_t kSat = ~std::uint64_t{0};

// Numeric value of x clamped to 64 bits, memoized per node.
std::uint64_t value_sat(const Num& x) {
    if (x.is_zero()) return 0;
    std::vector<const Num*> pending;
    const Num* p = &x;
    while (p->is_positive() && detail::NumAccess::node(*p)->value_sat == 0) {
        pending.push_back(p);
        p = &p->tail();
    }
    std::uint64_t acc =
        p->is_positive() ? detail::NumAccess::node(*p)->value_sat : 0;
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        const Num& q = **it;
        std::uint64_t res = kSat;
        if (acc != kSat) {
            std::uint64_t c = value_sat(q.counter());
            if (c < 63) {
                // o-block: acc -> 2^len (acc+1) - 1; i-block: with 2s.
                std::uint64_t len = c + 1;
                std::uint64_t base = q.is_odd() ? 1 : 2;
                std::uint64_t cap = kSat >> len;
                if (base <= cap && acc <= cap - base)
                    res = ((acc + base) << len) - base;
            }
        }
        detail::NumAccess::node(q)->value_sat = res;
        acc = res;
    }
    return acc;
}

// Bitsize of x clamped to 64 bits, memoized per node.
std::uint64_t bits_sat(const Num& x) {
    if (x.is_zero()) return 0;
    std::vector<const Num*> pending;
    const Num* p = &x;
    while (p->is_positive() && detail::NumAccess::node(*p)->bits_sat == 0) {
        pending.push_back(p);
        p = &p->tail();
    }
    std::uint64_t acc =
        p->is_positive() ? detail::NumAccess::node(*p)->bits_sat : 0;
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        const Num& q = **it;
        std::uint64_t res = kSat;
        if (acc != kSat) {
            std::uint64_t len = value_sat(q.counter());  // block length - 1
            if (len != kSat && acc <= kSat - 1 - len) res = acc + len + 1;
        }
        detail::NumAccess::node(q)->bits_sat = res;
        acc = res;
    }
    return acc;
}

// Lexicographic comparison of two equal-bitsize values, most significant
// block first, without materializing their reversed duals.
Ordering compare_back(const Num& x, const Num& y) {
    std::vector<const Num*> cx;
    std::vector<const Num*> cy;
    for (const Num* p = &x; p->is_positive(); p = &p->tail()) cx.push_back(p);
    for (const Num* p = &y; p->is_positive(); p = &p->tail()) cy.push_back(p);
    auto ix = cx.rbegin();
    auto iy = cy.rbegin();
    // Equal bitsizes guarantee a deciding block before either side runs out.
    for (; ix != cx.rend() && iy != cy.rend(); ++ix, ++iy) {
        const bool xo = (*ix)->is_odd();
        const bool yo = (*iy)->is_odd();
        if (xo != yo) return xo ? Ordering::lt : Ordering::gt;
        Ordering r = cmp((*ix)->counter(), (*iy)->counter());
        if (r == Ordering::eq) continue;
        // A longer run of o digits makes the number smaller; a longer run
        // of i digits makes it larger.
        if (xo) return r == Ordering::lt ? Ordering::gt : Ordering::lt;
        return r;
    }
    return Ordering::eq;
}

}  // namespace

Ordering cmp(const Num& x, const Num& y) {
    const bool xp = x.is_positive();
    const bool yp = y.is_positive();
    if (!xp && !yp) return Ordering::eq;
    if (!xp) return Ordering::lt;
    if (!yp) return Ordering::gt;
    // Unequal bitsizes already decide the order; use the machine-word view
    // when both fit, the exact trees otherwise.
    std::uint64_t bx = bits_sat(x);
    std::uint64_t by = bits_sat(y);
    if (bx != by) {
        if (bx != kSat && by != kSat)
            return bx < by ? Ordering::lt : Ordering::gt;
        return bx == kSat ? Ordering::gt : Ordering::lt;
    }
    if (bx == kSat) {
        Num bxn = bitsize(x);
        Num byn = bitsize(y);
        if (bxn != byn) return cmp(bxn, byn);
    }
    if (x == y) return Ordering::eq;
    return compare_back(x, y);
}

Ordering compare_big_first(const Num& x0, const Num& y0) {
    Num x = x0;
    Num y = y0;
    // Equal bitsizes guarantee both run out of blocks together.
    for (;;) {
        if (x.is_zero()) return Ordering::eq;
        const bool xo = x.is_odd();
        const bool yo = y.is_odd();
        if (xo != yo) return xo ? Ordering::lt : Ordering::gt;
        BlockView bx = xo ? split_o(x) : split_i(x);
        BlockView by = yo ? split_o(y) : split_i(y);
        Ordering r = cmp(bx.count, by.count);
        if (r == Ordering::eq) {
            x = bx.rest;
            y = by.rest;
            continue;
        }
        // A longer run of o digits makes the number smaller; a longer run
        // of i digits makes it larger.
        if (xo) return r == Ordering::lt ? Ordering::gt : Ordering::lt;
        return r;
    }
}

Num reversed_dual(const Num& x) {
    // Prepending the blocks in least-significant-first order reverses them;
    // the alternation works out so each block keeps the kind it has in x,
    // which flips the head kind exactly when the block count is even.
    Num out;
    for (const Num* p = &x; p->is_positive(); p = &p->tail())
        out = Num::cons(p->kind(), p->counter(), std::move(out));
    return out;
}

Num block_count(std::span<const Num> xs) {
    Num n;
    for (std::size_t i = 0; i < xs.size(); ++i) n = succ(n);
    return n;
}

Num block_count(const Num& x) {
    Num n;
    for (const Num* p = &x; p->is_positive(); p = &p->tail()) n = succ(n);
    return n;
}

Num bitsize(const Num& x) {
    // Walk down to the nearest memoized tail, then fill the memo upward.
    // Tails are shared, so across a computation each node pays for its own
    // block exactly once.
    std::vector<const Num*> pending;
    const Num* p = &x;
    while (p->is_positive() && !detail::NumAccess::node(*p)->bits_known) {
        pending.push_back(p);
        p = &p->tail();
    }
    Num acc =
        p->is_positive() ? detail::NumAccess::node(*p)->bits : Num{};
    for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
        acc = succ(add(acc, (*it)->counter()));
        detail::NumAccess::node(**it)->bits = acc;
        detail::NumAccess::node(**it)->bits_known = true;
    }
    return acc;
}

Num ilog2(const Num& x) {
    if (x.is_zero()) throw DomainError("ilog2: undefined on zero");
    return bitsize(pred(x));
}

Num twice(const Num& x) {
    if (x.is_zero()) return x;
    return pred(apply_o(x));
}

Num half(const Num& x) {
    if (x.is_zero()) return x;
    if (x.is_odd()) throw DomainError("half: value is odd");
    return unapply_o(succ(x));
}

Num exp2(const Num& x) {
    if (x.is_zero()) return Num::odd({});
    return succ(Num::odd(pred(x)));
}

Num left_shift(const Num& n, const Num& k) {
    if (k.is_zero()) return Num{};
    return succ(otimes(n, pred(k)));
}

}  // namespace hbn
