#include <doctest.h>

#include <random>

#include "helpers.hpp"

using namespace hbn;

TEST_CASE("mul basics") {
    CHECK(mul(t(7), Num{}) == Num{});
    CHECK(mul(Num{}, t(7)) == Num{});
    CHECK(mul(t(12), t(12)) == t(144));
}

TEST_CASE("mul differential against the oracle") {
    std::vector<Num> table;
    for (std::uint64_t k = 0; k <= 256; ++k) table.push_back(t(k));
    for (std::uint64_t a = 0; a <= 256; ++a)
        for (std::uint64_t b = 0; b <= 256; ++b)
            CHECK(mul(table[a], table[b]) == t(a * b));
}

TEST_CASE("mul on random wide operands") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        Natural a = (Natural(rng()) << 64) | rng();  // 128-bit
        Natural b = (Natural(rng()) << 64) | rng();
        CHECK(mul(from_natural(a), from_natural(b)) == from_natural(a * b));
    }
}

TEST_CASE("distributivity and shift consistency on samples") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        Num a = t(rng() % 512);
        Num b = t(rng() % 512);
        Num c = t(rng() % 512);
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    }
    for (std::uint64_t n = 0; n < 20; ++n)
        for (std::uint64_t k = 0; k < 20; ++k)
            CHECK(mul(exp2(t(n)), t(k)) == left_shift(t(n), t(k)));
}

TEST_CASE("tower product stays tractable") {
    Num a = succ(best_case(t(30)));
    Num b = succ(best_case(t(40)));
    CHECK(to_natural(tsize(mul(a, b))) == 668);
}

TEST_CASE("dense operands stay within the recursion bound") {
    // ~10^4-bit operands with alternating blocks
    Natural a = ((Natural(1) << 10000) - 1) / 3;
    Natural b = a + 12345;
    CHECK(mul(from_natural(a), from_natural(b)) == from_natural(a * b));
}
