#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hbn/natural.hpp"

namespace hbn {

/// Closed form for n-fold o application: o^n(k) = 2^n(k+1) - 1.
Natural nat_o_iter(const Natural& n, const Natural& k);

/// Closed form for n-fold i application: i^n(k) = 2^n(k+2) - 2.
Natural nat_i_iter(const Natural& n, const Natural& k);

struct Mismatch {
    std::string op;
    std::string input1;  // canonical tree syntax
    std::string input2;  // empty for unary ops
    std::string expected;
    std::string got;
};

struct DiffReport {
    std::uint64_t seed = 0;
    std::uint64_t cases = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
    std::string to_text() const;
    /// Columns: op,input1,input2,expected,got
    std::string to_csv() const;
};

/// Known operation names: add, sub, mul, cmp, double, half, exp2,
/// left_shift, bitsize, ilog2, succ, pred.
extern const std::vector<std::string> all_diff_ops;

/// Compare tree operations against Natural arithmetic: exhaustively on
/// 0..bound (pairs for binary ops), then on `random_trials` seeded random
/// 256-bit operand pairs. Partial operations are only exercised where
/// defined; a precondition violation must raise, never return a value.
DiffReport differential_suite(std::span<const std::string> op_set,
                              std::uint64_t bound,
                              std::uint64_t random_trials,
                              std::uint64_t seed);

}  // namespace hbn
