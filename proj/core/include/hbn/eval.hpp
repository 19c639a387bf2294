#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "hbn/arith.hpp"
#include "hbn/natural.hpp"
#include "hbn/tree.hpp"

namespace hbn {

enum class Format { decimal, tree, stats };

/// cmp(...) evaluates to an Ordering; everything else to a Num.
using Value = std::variant<Num, Ordering>;

/// Evaluate a calculator expression:
///   expr := term (("+"|"-") term)*
///   term := atom ("*" atom)*
///   atom := NAT | "e" | tree-literal | fn "(" expr ("," expr)* ")" | "(" expr ")"
///   fn   := succ|pred|pow2|shl|double|half|bitsize|tsize|ilog2|best|worst|cmp
/// Throws ParseError, UnderflowError, DomainError or ResourceError.
Value eval_expression(std::string_view expr);

struct FormatOptions {
    std::uint64_t decimal_bit_budget = default_bit_budget;
};

/// Render a value. decimal refuses with ResourceError (naming the bitsize)
/// when the value is too wide for the budget; stats prints bitsize, tsize,
/// parity, block count and leading-block length. Orderings always print as
/// "<", "=" or ">".
std::string format_value(const Value& v, Format f, const FormatOptions& opt = {});

}  // namespace hbn
