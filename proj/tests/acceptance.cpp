// Acceptance suite: one pass/fail line per criterion.
// Usage: hbn_acceptance <path-to-hbn_calc>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"

using namespace hbn;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": "
              << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!ok) ++failures;
}

double run_timed(const std::function<void()>& body) {
    auto start = Clock::now();
    body();
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& cli, const std::string& args) {
    CliResult r;
    std::string cmd = cli + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void criterion1() {
    bool ok = true;
    std::ostringstream why;

    if (to_natural(parse_tree("w(v(e,[]),[e,e,e])")) != 42) {
        ok = false;
        why << "42 example; ";
    }
    const char* table[] = {"e",          "v(e,[])", "w(e,[])",
                           "v(v(e,[]),[])", "w(e,[e])", "v(e,[e])"};
    for (std::uint64_t k = 0; k <= 5; ++k)
        if (t(k) != parse_tree(table[k])) {
            ok = false;
            why << "tree table at " << k << "; ";
        }
    Num x = t(123456);
    if (render_tree(x) != "w(e,[w(e,[e]),e,v(e,[]),e,w(e,[]),w(e,[])])" ||
        tsize(x) != t(12) || bitsize(x) != t(16)) {
        ok = false;
        why << "123456 structure; ";
    }
    if (to_natural(best_case(t(3))) != 65534) {
        ok = false;
        why << "best_case(3); ";
    }
    Num w3 = worst_case(t(3));
    if (render_tree(w3) != "w(e,[e,e,e,e,e])" || to_natural(w3) != 84) {
        ok = false;
        why << "worst_case(3); ";
    }
    for (std::uint64_t k = 0; k <= 10; ++k) {
        Natural want = 4 * ((Natural(1) << (2 * k)) - 1) / 3;
        if (to_natural(worst_case(t(k))) != want) {
            ok = false;
            why << "worst_case closed form at " << k << "; ";
        }
    }
    report(1, "exact paper value reproductions", ok, why.str());
}

void criterion2() {
    Num ts_add, ts_mul;
    double add_ms = run_timed([&] {
        ts_add = tsize(add(best_case(t(20)), best_case(t(30))));
    });
    double mul_ms = run_timed([&] {
        ts_mul = tsize(mul(succ(best_case(t(30))), succ(best_case(t(40)))));
    });
    bool ok = ts_add == t(314) && ts_mul == t(668) && add_ms < 1000.0 &&
              mul_ms < 1000.0;
    std::ostringstream detail;
    detail << "add tsize=" << to_natural(ts_add) << " in " << add_ms
           << " ms, mul tsize=" << to_natural(ts_mul) << " in " << mul_ms
           << " ms";
    report(2, "tower arithmetic tsize 314 / 668 under 1 s", ok, detail.str());
}

void criterion3() {
    DiffReport exhaustive, narrow_mul, random_run;
    std::vector<std::string> non_mul = {"add",  "sub",        "cmp",
                                        "double", "half",     "exp2",
                                        "left_shift", "bitsize", "ilog2"};
    std::vector<std::string> only_mul = {"mul"};
    std::vector<std::string> random_ops = {"add",  "sub",  "mul",
                                           "cmp",  "double", "half",
                                           "left_shift", "bitsize", "ilog2"};
    double ms = run_timed([&] {
        exhaustive = differential_suite(non_mul, 512, 0, 42);
        narrow_mul = differential_suite(only_mul, 256, 0, 42);
        random_run = differential_suite(random_ops, 0, 1000, 42);
    });
    bool ok = exhaustive.ok() && narrow_mul.ok() && random_run.ok() &&
              ms < 120000.0;
    std::ostringstream detail;
    detail << (exhaustive.cases + narrow_mul.cases + random_run.cases)
           << " cases, "
           << (exhaustive.mismatches.size() + narrow_mul.mismatches.size() +
               random_run.mismatches.size())
           << " mismatches, " << ms << " ms";
    if (!ok) {
        for (const DiffReport* r : {&exhaustive, &narrow_mul, &random_run})
            if (!r->ok()) std::cerr << r->to_text();
    }
    report(3, "differential correctness vs the natural oracle", ok,
           detail.str());
}

void criterion4() {
    bool ok = true;
    std::ostringstream why;
    double ms = run_timed([&] {
        Num x;
        for (std::uint64_t k = 0; k <= (1u << 16); ++k) {
            if (to_natural(x) != k) {
                ok = false;
                why << "n(t(k)) at " << k << "; ";
                break;
            }
            if (x.is_zero() != (k == 0) || x.is_odd() != (k % 2 == 1) ||
                x.is_even_positive() != (k > 0 && k % 2 == 0)) {
                ok = false;
                why << "parity at " << k << "; ";
                break;
            }
            if (from_natural(Natural(k)) != x) {
                ok = false;
                why << "t(n) at " << k << "; ";
                break;
            }
            Num next = succ(x);
            if (pred(next) != x) {
                ok = false;
                why << "pred(succ) at " << k << "; ";
                break;
            }
            x = next;
        }
        for (const Num& tr : trees_up_to_size(6)) {
            Natural n;
            try {
                n = to_natural(tr, 1u << 16);  // skip tower-sized values
            } catch (const ResourceError&) {
                continue;
            }
            if (from_natural(n) != tr) {
                ok = false;
                why << "t.n != id on a size<=6 tree; ";
                break;
            }
        }
        for (std::uint64_t k = 0; k < 4096; ++k) {
            Num v = t(k);
            if (unapply_o(apply_o(v)) != v || unapply_i(apply_i(v)) != v) {
                ok = false;
                why << "apply/unapply at " << k << "; ";
                break;
            }
            if (reversed_dual(reversed_dual(v)) != v) {
                ok = false;
                why << "reversed_dual involution at " << k << "; ";
                break;
            }
        }
        for (std::uint64_t k = 0; k < (1u << 14); ++k) {
            Num v = t(k);
            if (cmp(tsize(v), bitsize(v)) == Ordering::gt) {
                ok = false;
                why << "tsize > bitsize at " << k << "; ";
                break;
            }
        }
    });
    ok = ok && ms < 60000.0;
    why << ms << " ms";
    report(4, "round-trip and structure properties", ok, why.str());
}

void criterion5() {
    SuccCostReport r = measure_succ_cost(1u << 20);
    bool ok = r.average() >= 2.1 && r.average() <= 2.35;
    std::ostringstream detail;
    detail << "average " << r.average() << " calls per succ over 2^20";
    report(5, "successor cost statistic in [2.1, 2.35]", ok, detail.str());
}

void criterion6() {
    Num result;
    double ms = run_timed(
        [&] { result = bitsize(pred(exp2(t(57885161)))); });
    bool ok = result == t(57885161) && ms < 100.0;
    std::ostringstream detail;
    detail << ms << " ms";
    report(6, "giant-number structural ops under 100 ms", ok, detail.str());
}

void criterion7(const std::string& cli) {
    bool ok = true;
    std::ostringstream why;
    struct Case {
        const char* args;
        const char* want;
    };
    const Case cases[] = {
        {"eval \"best(3)\" --format decimal", "65534\n"},
        {"eval \"tsize(best(20) + best(30))\" --format decimal", "314\n"},
        {"eval \"tsize((best(30)+1) * (best(40)+1))\" --format decimal",
         "668\n"},
    };
    for (const Case& c : cases) {
        CliResult r = run_cli(cli, c.args);
        if (r.exit_code != 0 || r.output != c.want) {
            ok = false;
            why << "'" << c.args << "' -> exit " << r.exit_code << " output '"
                << r.output << "'; ";
        }
    }
    // exit codes: 1 parse, 2 arithmetic, 3 resource
    CliResult parse_err = run_cli(cli, "eval \"2+\"");
    if (parse_err.exit_code != 1) {
        ok = false;
        why << "parse error exit " << parse_err.exit_code << "; ";
    }
    CliResult under = run_cli(cli, "eval \"3-5\" --format decimal");
    if (under.exit_code != 2) {
        ok = false;
        why << "underflow exit " << under.exit_code << "; ";
    }
    CliResult resource =
        run_cli(cli, "eval \"best(5)\" --format decimal");
    if (resource.exit_code != 3) {
        ok = false;
        why << "resource exit " << resource.exit_code << "; ";
    }
    // parse errors report a position
    CliResult pos = run_cli(cli, "eval \"2+*3\"");
    if (pos.exit_code != 1 || pos.output.find("position") == std::string::npos) {
        ok = false;
        why << "parse error message lacks a position; ";
    }
    report(7, "CLI conformance", ok, why.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "./hbn_calc";
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(cli);
    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
