#pragma once

#include <string>
#include <string_view>

#include "hbn/tree.hpp"

namespace hbn {

/// Parse the canonical term syntax
///   t := "e" | ("v"|"w") "(" t "," "[" (t ("," t)*)? "]" ")"
/// Whitespace between tokens is ignored. Throws ParseError with a byte
/// position on malformed input.
Num parse_tree(std::string_view text);

/// Parse a single term starting at `pos`, leaving `pos` just past it.
/// Used by the calculator grammar, which embeds tree literals.
Num parse_tree_at(std::string_view text, std::size_t& pos);

/// Render in canonical form, e.g. "w(v(e,[]),[e,e,e])". No whitespace.
std::string render_tree(const Num& x);

}  // namespace hbn
