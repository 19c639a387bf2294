#pragma once

#include "hbn/tree.hpp"

namespace hbn {

/// Leading run-length block of a positive number: the block holds
/// `count`+1 digits and `rest` is the remainder, never led by a block of
/// the same kind.
struct BlockView {
    Num count;
    Num rest;
};

/// n-fold application of o: otimes(n,y) denotes 2^n(y+1)-1. Merges into an
/// existing o-block with a single add on counters; otherwise prepends a new
/// block. otimes(e,y) = y.
Num otimes(const Num& n, const Num& y);

/// n-fold application of i: itimes(n,y) denotes 2^n(y+2)-2.
Num itimes(const Num& n, const Num& y);

/// Extract the leading o-block; requires an odd value.
BlockView split_o(const Num& x);

/// Extract the leading i-block; requires an even positive value.
BlockView split_i(const Num& x);

// Fused one-block sums, k >= 1:
//   oplus:  o^k(x) + o^k(y) = i^k(x+y)
//   oiplus: o^k(x) + i^k(y) = i^k(x+y+1) - 1   (symmetric in x,y)
//   iplus:  i^k(x) + i^k(y) = i^k(x+y+2) - 2
Num oplus(const Num& k, const Num& x, const Num& y);
Num oiplus(const Num& k, const Num& x, const Num& y);
Num iplus(const Num& k, const Num& x, const Num& y);

// Fused one-block differences, k >= 1. Side conditions are checked eagerly
// and raise UnderflowError when violated:
//   ominus:  o^k(x) - o^k(y) = o^k(x-y-1) + 1   for x >= y
//   iminus:  i^k(x) - i^k(y) = o^k(x-y-1) + 1   for x >= y
//   oiminus: o^k(x) - i^k(y) = o^k(x-y-2) + 2   for x >= y+1
//   iominus: i^k(x) - o^k(y) = o^k(x-y)         for x >= y
Num ominus(const Num& k, const Num& x, const Num& y);
Num iminus(const Num& k, const Num& x, const Num& y);
Num oiminus(const Num& k, const Num& x, const Num& y);
Num iominus(const Num& k, const Num& x, const Num& y);

}  // namespace hbn
