// Calculator and benchmark front-end for hereditarily binary numbers.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>

#include "hbn/hbn.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start)
        .count();
}

int run_eval(const std::string& expr, const std::string& format,
             std::uint64_t budget) {
    hbn::Format f = hbn::Format::stats;
    if (format == "decimal") f = hbn::Format::decimal;
    else if (format == "tree") f = hbn::Format::tree;
    else if (format != "stats") {
        std::cerr << "unknown format '" << format << "'\n";
        return 1;
    }
    hbn::Value v = hbn::eval_expression(expr);
    hbn::FormatOptions opt;
    opt.decimal_bit_budget = budget;
    std::cout << hbn::format_value(v, f, opt) << "\n";
    return 0;
}

int bench_succ_avg(std::uint64_t scale) {
    if (scale == 0) scale = 1u << 20;
    auto start = Clock::now();
    hbn::SuccCostReport report = hbn::measure_succ_cost(scale);
    double elapsed = ms_since(start);
    std::cout << "succ_avg: range=" << report.range
              << " succ_calls=" << report.stats.succ_calls
              << " pred_calls=" << report.stats.pred_calls
              << " total=" << report.stats.total_calls()
              << " average=" << report.average() << " time_ms=" << elapsed
              << "\n";
    std::cout << "convention: every succ/pred invocation is counted, the "
                 "top-level one included\n";
    return 0;
}

int bench_tower_add(std::uint64_t scale) {
    std::uint64_t k1 = scale == 0 ? 20 : scale;
    std::uint64_t k2 = scale == 0 ? 30 : scale + 10;
    hbn::Num a = hbn::best_case(hbn::from_natural(k1));
    hbn::Num b = hbn::best_case(hbn::from_natural(k2));
    auto start = Clock::now();
    hbn::Num sum = hbn::add(a, b);
    hbn::Num ts = hbn::tsize(sum);
    double elapsed = ms_since(start);
    std::cout << "tower_add: towers=(" << k1 << "," << k2
              << ") tsize=" << hbn::to_natural(ts) << " time_ms=" << elapsed
              << "\n";
    return 0;
}

int bench_tower_mul(std::uint64_t scale) {
    std::uint64_t k1 = scale == 0 ? 30 : scale;
    std::uint64_t k2 = scale == 0 ? 40 : scale + 10;
    hbn::Num a = hbn::succ(hbn::best_case(hbn::from_natural(k1)));
    hbn::Num b = hbn::succ(hbn::best_case(hbn::from_natural(k2)));
    auto start = Clock::now();
    hbn::Num prod = hbn::mul(a, b);
    hbn::Num ts = hbn::tsize(prod);
    double elapsed = ms_since(start);
    std::cout << "tower_mul: towers=(" << k1 << "," << k2
              << ") tsize=" << hbn::to_natural(ts) << " time_ms=" << elapsed
              << "\n";
    return 0;
}

int bench_vs_oracle(std::uint64_t scale, std::uint64_t seed) {
    if (scale == 0) scale = 256;
    std::mt19937_64 rng(seed);
    auto random_nat = [&](std::uint64_t bits) {
        hbn::Natural n = 0;
        for (std::uint64_t b = 0; b < bits; b += 64) n = (n << 64) | rng();
        return n;
    };
    hbn::Natural na = random_nat(scale);
    hbn::Natural nb = random_nat(scale);
    hbn::Num ta = hbn::from_natural(na);
    hbn::Num tb = hbn::from_natural(nb);
    hbn::Num tower_a = hbn::best_case(hbn::from_natural(20));
    hbn::Num tower_b = hbn::best_case(hbn::from_natural(30));

    constexpr int reps = 200;
    auto time_it = [&](auto fn) {
        auto start = Clock::now();
        for (int i = 0; i < reps; ++i) fn();
        return ms_since(start) / reps;
    };
    std::cout << "vs_oracle: seed=" << seed << " dense_bits=" << scale
              << " reps=" << reps << "\n";
    std::cout << "op          operands  hbn_ms      natural_ms\n";
    double t1 = time_it([&] { (void)hbn::add(ta, tb); });
    double t2 = time_it([&] { (void)hbn::Natural(na + nb); });
    std::cout << "add         dense     " << t1 << "  " << t2 << "\n";
    double t3 = time_it([&] { (void)hbn::mul(ta, tb); });
    double t4 = time_it([&] { (void)hbn::Natural(na * nb); });
    std::cout << "mul         dense     " << t3 << "  " << t4 << "\n";
    double t5 = time_it([&] { (void)hbn::cmp(ta, tb); });
    double t6 = time_it([&] { (void)(na < nb); });
    std::cout << "cmp         dense     " << t5 << "  " << t6 << "\n";
    double t7 = time_it([&] { (void)hbn::add(tower_a, tower_b); });
    std::cout << "add         tower     " << t7
              << "  (not representable)\n";
    double t8 = time_it([&] { (void)hbn::cmp(tower_a, tower_b); });
    std::cout << "cmp         tower     " << t8
              << "  (not representable)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"calculator for hereditarily binary numbers"};
    app.require_subcommand(1);

    std::string expr;
    std::string format = "stats";
    std::uint64_t budget = hbn::default_bit_budget;
    CLI::App* eval = app.add_subcommand("eval", "evaluate an expression");
    eval->add_option("expr", expr, "expression to evaluate")->required();
    eval->add_option("--format", format, "decimal|tree|stats");
    eval->add_option("--decimal-bit-budget", budget,
                     "largest bitsize printed in decimal");

    std::string scenario;
    std::uint64_t scale = 0;
    std::uint64_t seed = 42;
    CLI::App* bench = app.add_subcommand("bench", "run a benchmark scenario");
    bench->add_option("scenario", scenario,
                      "succ_avg|tower_add|tower_mul|vs_oracle")
        ->required();
    bench->add_option("scale", scale, "scenario scale (0 = default)");
    bench->add_option("--seed", seed, "seed for bench randomness");

    try {
        app.parse(argc, argv);
        if (eval->parsed()) return run_eval(expr, format, budget);
        if (scenario == "succ_avg") return bench_succ_avg(scale);
        if (scenario == "tower_add") return bench_tower_add(scale);
        if (scenario == "tower_mul") return bench_tower_mul(scale);
        if (scenario == "vs_oracle") return bench_vs_oracle(scale, seed);
        std::cerr << "unknown scenario '" << scenario << "'\n";
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const hbn::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const hbn::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const hbn::UnderflowError& e) {
        std::cerr << "arithmetic error: " << e.what() << "\n";
        return 2;
    } catch (const hbn::DomainError& e) {
        std::cerr << "arithmetic error: " << e.what() << "\n";
        return 2;
    }
}
