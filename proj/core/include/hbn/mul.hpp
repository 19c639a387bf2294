#pragma once

#include "hbn/tree.hpp"

namespace hbn {

/// Multiplication. The odd*odd case works one block at a time through
///   o^n(a) * o^m(b) = o^(n+m)(ab+a+b) - o^n(a) - o^m(b)
/// and the mixed/even cases reduce to it via i = succ(o(.)). The reduced
/// cases shrink an operand by one digit per step, so recursion depth is
/// bounded by the smaller operand's bitsize.
Num mul(const Num& x, const Num& y);

}  // namespace hbn
