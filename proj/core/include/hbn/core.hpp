#pragma once

#include <cstdint>

#include "hbn/natural.hpp"
#include "hbn/stats.hpp"
#include "hbn/tree.hpp"

namespace hbn {

/// Successor. Recurses only on block counters, so its cost is an iterated
/// logarithm of the operand's magnitude. When `stats` is non-null every
/// succ/pred invocation (including this one) is counted.
Num succ(const Num& x, OpStats* stats = nullptr);

/// Predecessor. Throws UnderflowError on zero.
Num pred(const Num& x, OpStats* stats = nullptr);

/// Apply one o(x)=2x+1 digit; result is always odd.
Num apply_o(const Num& x, OpStats* stats = nullptr);

/// Apply one i(x)=2x+2 digit; result is always even positive.
Num apply_i(const Num& x, OpStats* stats = nullptr);

/// Remove one o digit. Throws DomainError unless the value is odd.
Num unapply_o(const Num& x, OpStats* stats = nullptr);

/// Remove one i digit. Throws DomainError unless the value is even positive.
Num unapply_i(const Num& x, OpStats* stats = nullptr);

/// Materialize the denoted natural number. Throws ResourceError when the
/// value's bitsize exceeds `max_bits`, since a small tree can denote a
/// tower of exponents.
Natural to_natural(const Num& x, std::uint64_t max_bits = default_bit_budget);

/// Canonical tree for a nonnegative integer. Linear in the bitsize of `k`
/// and iterative over the digit blocks.
Num from_natural(const Natural& k);

}  // namespace hbn
