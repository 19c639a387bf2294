#pragma once

#include <span>

#include "hbn/tree.hpp"

namespace hbn {

/// Three-valued comparison result; total order isomorphic to the one on
/// the naturals.
enum class Ordering { lt, eq, gt };

/// Addition, one run-length block at a time. The block loop runs
/// iteratively over an explicit level stack, so the call depth does not
/// grow with the number of blocks.
Num add(const Num& x, const Num& y);

/// Subtraction; throws UnderflowError when x < y. The ordering is checked
/// once up front; the iterative block loop then cannot underflow.
Num sub(const Num& x, const Num& y);

/// Compare by bitsize first (recursively, without materializing anything),
/// then lexicographically on the biggest-digit-first block sequence.
Ordering cmp(const Num& x, const Num& y);

/// Lexicographic block comparison of two reversed duals of equal bitsize.
/// A longer o-block makes the number smaller, a longer i-block larger;
/// recursion happens only across identical blocks.
Ordering compare_big_first(const Num& x, const Num& y);

/// Reverse the block sequence to biggest-digit-first order. The node kind
/// flips when the number of blocks is even. Involution.
Num reversed_dual(const Num& x);

/// Length of a counter sequence, as a tree.
Num block_count(std::span<const Num> xs);

/// Number of run-length blocks of a value (0 for zero).
Num block_count(const Num& x);

/// Total number of o/i digits: sum over blocks of count+1. Equals the
/// bijective base-2 digit count, floor(log2(k+1)). Memoized per node, so
/// repeated comparisons over shared tails stay cheap.
Num bitsize(const Num& x);

/// floor(log2), computed as bitsize(pred(x)). Throws DomainError on zero.
Num ilog2(const Num& x);

/// 2k and its inverse. half throws DomainError on odd input; half(0) = 0.
Num twice(const Num& x);
Num half(const Num& x);

/// 2^k with a constant number of succ/pred steps.
Num exp2(const Num& x);

/// k * 2^n; logarithmic in the bitsize of the operands.
Num left_shift(const Num& n, const Num& k);

}  // namespace hbn
