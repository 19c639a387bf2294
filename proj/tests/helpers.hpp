#pragma once

#include <cstdint>
#include <vector>

#include "hbn/hbn.hpp"

// Shorthand used throughout the tests: the canonical tree of k.
inline hbn::Num t(std::uint64_t k) {
    return hbn::from_natural(hbn::Natural(k));
}

inline hbn::Natural n_of(const hbn::Num& x) { return hbn::to_natural(x); }

// All trees of structural size exactly `size` (tsize, root excluded).
inline std::vector<hbn::Num> trees_of_size(std::uint64_t size) {
    using hbn::Num;
    if (size == 0) return {Num{}};
    // Nonempty counter sequences whose total weight sum(1 + tsize(el)) == w.
    std::vector<std::vector<std::vector<Num>>> seq_memo(size + 1);
    std::vector<std::vector<Num>> tree_memo(size + 1);
    tree_memo[0] = {Num{}};

    for (std::uint64_t w = 1; w <= size; ++w) {
        for (std::uint64_t c = 1; c <= w; ++c) {
            for (const Num& head : tree_memo[c - 1]) {
                if (c == w) {
                    seq_memo[w].push_back({head});
                } else {
                    for (const auto& tail : seq_memo[w - c]) {
                        std::vector<Num> seq;
                        seq.reserve(tail.size() + 1);
                        seq.push_back(head);
                        seq.insert(seq.end(), tail.begin(), tail.end());
                        seq_memo[w].push_back(std::move(seq));
                    }
                }
            }
        }
        for (const auto& seq : seq_memo[w]) {
            std::vector<Num> rest(seq.begin() + 1, seq.end());
            tree_memo[w].push_back(Num::odd(seq[0], rest));
            tree_memo[w].push_back(Num::even(seq[0], rest));
        }
    }
    return tree_memo[size];
}

inline std::vector<hbn::Num> trees_up_to_size(std::uint64_t size) {
    std::vector<hbn::Num> all;
    for (std::uint64_t s = 0; s <= size; ++s)
        for (auto& x : trees_of_size(s)) all.push_back(x);
    return all;
}
