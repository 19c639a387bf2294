#include "hbn/oracle.hpp"

#include <functional>
#include <random>
#include <sstream>

#include "hbn/arith.hpp"
#include "hbn/core.hpp"
#include "hbn/errors.hpp"
#include "hbn/mul.hpp"
#include "hbn/text.hpp"

namespace hbn {

namespace {

unsigned small_exponent(const Natural& n) {
    if (n < 0 || n > 1000000)
        throw ResourceError("nat iterated block: exponent out of range");
    return n.convert_to<unsigned>();
}

std::string show(const Ordering& o) {
    switch (o) {
        case Ordering::lt: return "<";
        case Ordering::eq: return "=";
        case Ordering::gt: return ">";
    }
    return "?";
}

Natural nat_bitsize(const Natural& k) {
    if (k == 0) return 0;
    return Natural(boost::multiprecision::msb(Natural(k + 1)));
}

// One operation of the differential table: run the tree-side computation on
// canonical trees of (a, b) and compare against Natural arithmetic.
struct OpCheck {
    std::string name;
    bool binary;
    // Returns false when the inputs are outside the op's domain.
    std::function<bool(const Natural& a, const Natural& b, const Num& ta,
                       const Num& tb, std::string& expected, std::string& got)>
        run;
};

std::vector<OpCheck> build_checks() {
    std::vector<OpCheck> checks;
    auto push = [&](std::string name, bool binary, auto domain, auto tree_fn,
                    auto nat_fn) {
        checks.push_back(OpCheck{
            std::move(name), binary,
            [domain, tree_fn, nat_fn](const Natural& a, const Natural& b,
                                      const Num& ta, const Num& tb,
                                      std::string& expected,
                                      std::string& got) {
                if (!domain(a, b)) return false;
                Natural want = nat_fn(a, b);
                Num result = tree_fn(ta, tb);
                if (!(result == from_natural(want))) {
                    expected = "t(" + want.str() + ")";
                    got = render_tree(result);
                }
                return true;
            }});
    };
    auto any = [](const Natural&, const Natural&) { return true; };

    push("add", true, any,
         [](const Num& x, const Num& y) { return add(x, y); },
         [](const Natural& a, const Natural& b) { return Natural(a + b); });
    push("sub", true,
         [](const Natural& a, const Natural& b) { return a >= b; },
         [](const Num& x, const Num& y) { return sub(x, y); },
         [](const Natural& a, const Natural& b) { return Natural(a - b); });
    push("mul", true, any,
         [](const Num& x, const Num& y) { return mul(x, y); },
         [](const Natural& a, const Natural& b) { return Natural(a * b); });

    // cmp compares symbols rather than trees.
    checks.push_back(OpCheck{
        "cmp", true,
        [](const Natural& a, const Natural& b, const Num& ta, const Num& tb,
           std::string& expected, std::string& got) {
            Ordering want = a < b   ? Ordering::lt
                            : a > b ? Ordering::gt
                                    : Ordering::eq;
            Ordering result = cmp(ta, tb);
            if (result != want) {
                expected = show(want);
                got = show(result);
            }
            return true;
        }});

    push("double", false, any,
         [](const Num& x, const Num&) { return twice(x); },
         [](const Natural& a, const Natural&) { return Natural(2 * a); });
    push("half", false,
         [](const Natural& a, const Natural&) { return a % 2 == 0; },
         [](const Num& x, const Num&) { return half(x); },
         [](const Natural& a, const Natural&) { return Natural(a / 2); });
    push("exp2", false,
         [](const Natural& a, const Natural&) { return a <= 64; },
         [](const Num& x, const Num&) { return exp2(x); },
         [](const Natural& a, const Natural&) {
             return Natural(Natural(1) << a.convert_to<unsigned>());
         });
    push("left_shift", true,
         [](const Natural& a, const Natural&) { return a <= 4096; },
         [](const Num& x, const Num& y) { return left_shift(x, y); },
         [](const Natural& a, const Natural& b) {
             return Natural(b << a.convert_to<unsigned>());
         });
    push("bitsize", false, any,
         [](const Num& x, const Num&) { return bitsize(x); },
         [](const Natural& a, const Natural&) { return nat_bitsize(a); });
    push("ilog2", false,
         [](const Natural& a, const Natural&) { return a >= 1; },
         [](const Num& x, const Num&) { return ilog2(x); },
         [](const Natural& a, const Natural&) {
             return Natural(boost::multiprecision::msb(a));
         });
    push("succ", false, any,
         [](const Num& x, const Num&) { return succ(x); },
         [](const Natural& a, const Natural&) { return Natural(a + 1); });
    push("pred", false,
         [](const Natural& a, const Natural&) { return a >= 1; },
         [](const Num& x, const Num&) { return pred(x); },
         [](const Natural& a, const Natural&) { return Natural(a - 1); });
    return checks;
}

}  // namespace

const std::vector<std::string> all_diff_ops = {
    "add",  "sub",  "mul",        "cmp",     "double", "half",
    "exp2", "left_shift", "bitsize", "ilog2", "succ",   "pred"};

Natural nat_o_iter(const Natural& n, const Natural& k) {
    if (k < 0) throw DomainError("nat_o_iter: negative input");
    return (Natural(k + 1) << small_exponent(n)) - 1;
}

Natural nat_i_iter(const Natural& n, const Natural& k) {
    if (k < 0) throw DomainError("nat_i_iter: negative input");
    return (Natural(k + 2) << small_exponent(n)) - 2;
}

std::string DiffReport::to_text() const {
    std::ostringstream out;
    out << "differential suite: seed=" << seed << " cases=" << cases
        << " mismatches=" << mismatches.size() << "\n";
    for (const Mismatch& m : mismatches)
        out << m.op << "(" << m.input1
            << (m.input2.empty() ? "" : ", " + m.input2)
            << "): expected " << m.expected << ", got " << m.got << "\n";
    return out.str();
}

std::string DiffReport::to_csv() const {
    std::ostringstream out;
    out << "op,input1,input2,expected,got\n";
    for (const Mismatch& m : mismatches)
        out << m.op << "," << m.input1 << "," << m.input2 << "," << m.expected
            << "," << m.got << "\n";
    return out.str();
}

DiffReport differential_suite(std::span<const std::string> op_set,
                              std::uint64_t bound,
                              std::uint64_t random_trials,
                              std::uint64_t seed) {
    DiffReport report;
    report.seed = seed;
    std::vector<OpCheck> all = build_checks();
    std::vector<OpCheck> selected;
    for (const OpCheck& c : all)
        for (const std::string& name : op_set)
            if (c.name == name) selected.push_back(c);

    // Canonical trees for the exhaustive range, built once.
    std::vector<Num> table;
    table.reserve(bound + 1);
    for (std::uint64_t i = 0; i <= bound; ++i)
        table.push_back(from_natural(Natural(i)));

    auto run_case = [&](const OpCheck& c, const Natural& a, const Natural& b,
                        const Num& ta, const Num& tb) {
        std::string expected;
        std::string got;
        if (!c.run(a, b, ta, tb, expected, got)) return;
        ++report.cases;
        if (!expected.empty() || !got.empty())
            report.mismatches.push_back(Mismatch{
                c.name, render_tree(ta), c.binary ? render_tree(tb) : "",
                expected, got});
    };

    for (const OpCheck& c : selected) {
        for (std::uint64_t a = 0; a <= bound; ++a) {
            if (!c.binary) {
                run_case(c, Natural(a), 0, table[a], Num{});
                continue;
            }
            for (std::uint64_t b = 0; b <= bound; ++b)
                run_case(c, Natural(a), Natural(b), table[a], table[b]);
        }
    }

    std::mt19937_64 rng(seed);
    auto wide = [&rng]() {
        Natural n = 0;
        for (int limb = 0; limb < 4; ++limb) n = (n << 64) | Natural(rng());
        return n;
    };
    for (std::uint64_t trial = 0; trial < random_trials; ++trial) {
        Natural a = wide();
        Natural b = wide();
        Num ta = from_natural(a);
        Num tb = from_natural(b);
        for (const OpCheck& c : selected) {
            if (c.name == "exp2") continue;  // oracle side intractable
            if (c.name == "left_shift") {
                Natural n = a % 1024;
                run_case(c, n, b, from_natural(n), tb);
                continue;
            }
            if (c.name == "sub" && a < b) {
                run_case(c, b, a, tb, ta);
                continue;
            }
            if (c.name == "half" && a % 2 == 1) {
                Natural ae = a - 1;
                run_case(c, ae, 0, from_natural(ae), Num{});
                continue;
            }
            run_case(c, a, b, ta, tb);
        }
    }
    return report;
}

}  // namespace hbn
