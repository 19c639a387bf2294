#pragma once

#include <string>

#include "hbn/arith.hpp"
#include "hbn/core.hpp"
#include "hbn/text.hpp"
#include "hbn/tree.hpp"

namespace hbn::detail {

// Backdoor for the arithmetic layer: reach the shared node of a value to
// read and fill its write-once memo fields.
struct NumAccess {
    static const Num::Node* node(const Num& x) { return x.node_; }
};

// Human-readable form of a (possibly huge) value: decimal when it fits in
// a handful of machine words, canonical tree syntax otherwise.
inline std::string describe(const Num& x) {
    try {
        return to_natural(x, 256).str();
    } catch (const Error&) {
        return render_tree(x);
    }
}

// "op: <reason> (bitsize lhs = ..., bitsize rhs = ...)"
inline std::string operand_note(const Num& x, const Num& y) {
    return " (bitsize lhs = " + describe(bitsize(x)) +
           ", bitsize rhs = " + describe(bitsize(y)) + ")";
}

}  // namespace hbn::detail
