#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace hbn {

/// Conventional unbounded nonnegative integer. Used for conversion, the
/// reference oracle and I/O only; the arithmetic modules never touch it.
using Natural = boost::multiprecision::cpp_int;

/// Default cap on the bitsize a value may have before to_natural refuses
/// to materialize it.
inline constexpr std::uint64_t default_bit_budget = 1u << 20;

}  // namespace hbn
