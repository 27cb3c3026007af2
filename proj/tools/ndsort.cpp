// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndsort/ndsort.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

auto algorithm_from(std::string const& name) -> ndsort::Algorithm
{
    if (auto algo = ndsort::parse_algorithm(name)) {
        return *algo;
    }
    throw usage_error("unknown algorithm '" + name + "' (expected ro|rs|ens-ss|ens-bs|naive)");
}

auto generator_from(std::string const& name) -> ndsort::GeneratorKind
{
    if (auto kind = ndsort::parse_generator_kind(name)) {
        return *kind;
    }
    throw usage_error("unknown generator '" + name + "' (expected uniform|single-front|chain|duplicates|file)");
}

struct Options {
    std::vector<std::string> algos;
    std::vector<std::string> gens;
    std::vector<std::size_t> ns;
    std::vector<std::size_t> ms;
    std::uint64_t seed { 0 };
    std::size_t seeds { 0 };
    std::size_t reps { 5 };
    std::size_t warmup { 2 };
    double dup_fraction { 0.3 };
    std::string input;
    std::string csv;
    std::uint64_t mem_cap_bytes { ndsort::SortOptions {}.mem_cap_bytes };
};

auto add_common(CLI::App* cmd, Options& opt) -> void
{
    cmd->add_option("--n", opt.ns, "solution count (repeatable)");
    cmd->add_option("--m", opt.ms, "objective count (repeatable)");
    cmd->add_option("--seed", opt.seed, "base seed");
    cmd->add_option("--dup-fraction", opt.dup_fraction, "fraction of copied rows for the duplicates generator");
    cmd->add_option("--input", opt.input, "matrix file (one solution per line)");
    cmd->add_option("--mem-cap-bytes", opt.mem_cap_bytes, "memory cap for rs dominance sets");
}

auto cmd_sort(Options const& opt) -> int
{
    if (opt.algos.size() > 1 || opt.gens.size() > 1 || opt.ns.size() > 1 || opt.ms.size() > 1) {
        throw usage_error("sort takes a single --algo, --gen, --n and --m");
    }
    auto algo = opt.algos.empty() ? ndsort::Algorithm::rank_intersect : algorithm_from(opt.algos.front());

    ndsort::GeneratorSpec spec;
    if (!opt.gens.empty()) {
        spec.kind = generator_from(opt.gens.front());
    } else if (!opt.input.empty()) {
        spec.kind = ndsort::GeneratorKind::file;
    } else {
        throw usage_error("sort needs --input or --gen");
    }
    spec.n = opt.ns.empty() ? 100 : opt.ns.front();
    spec.m = opt.ms.empty() ? 2 : opt.ms.front();
    spec.seed = opt.seed;
    spec.dup_fraction = opt.dup_fraction;
    spec.path = opt.input;

    auto obj = ndsort::generate(spec);
    auto ranks = ndsort::sort_solutions(algo, obj, ndsort::SortOptions { opt.mem_cap_bytes });
    ndsort::print_fronts(std::cout, ndsort::fronts_from_ranks(ranks));
    return exit_ok;
}

auto cmd_verify(Options const& opt) -> int
{
    ndsort::VerifyConfig config;
    if (!opt.gens.empty()) {
        config.gens.clear();
        for (auto const& g : opt.gens) {
            config.gens.push_back(generator_from(g));
        }
    }
    if (!opt.ns.empty()) {
        config.ns = opt.ns;
    }
    if (!opt.ms.empty()) {
        config.ms = opt.ms;
    }
    if (opt.seeds != 0) {
        config.seeds = opt.seeds;
    }
    config.seed = opt.seed;
    config.dup_fraction = opt.dup_fraction;
    config.input = opt.input;

    ndsort::SortOptions sort_options { opt.mem_cap_bytes };
    auto sorters = ndsort::default_sorters(sort_options);
    if (!opt.algos.empty()) {
        std::vector<ndsort::NamedSorter> selected;
        for (auto const& name : opt.algos) {
            auto algo = algorithm_from(name);
            selected.push_back({ name, [algo, sort_options](ndsort::ObjectiveMatrix const& obj) {
                                    return ndsort::sort_solutions(algo, obj, sort_options);
                                } });
        }
        sorters = std::move(selected);
    }

    auto report = ndsort::run_verify(config, sorters, std::cerr);
    if (!report.ok()) {
        std::cout << report.mismatches.size() << " mismatches in " << report.checks << " checks over "
                  << report.instances << " instances\n";
        return exit_mismatch;
    }
    std::cout << "all equivalent (" << report.checks << " checks over " << report.instances << " instances)\n";
    return exit_ok;
}

auto cmd_bench(Options const& opt) -> int
{
    ndsort::BenchConfig config;
    if (!opt.algos.empty()) {
        config.algos.clear();
        for (auto const& a : opt.algos) {
            config.algos.push_back(algorithm_from(a));
        }
    }
    if (opt.gens.size() > 1) {
        throw usage_error("bench takes a single --gen");
    }
    if (!opt.gens.empty()) {
        config.gen = generator_from(opt.gens.front());
    } else if (!opt.input.empty()) {
        config.gen = ndsort::GeneratorKind::file;
    }
    if (!opt.ns.empty()) {
        config.ns = opt.ns;
    }
    if (!opt.ms.empty()) {
        config.ms = opt.ms;
    }
    config.seed = opt.seed;
    config.seeds = opt.seeds == 0 ? 1 : opt.seeds;
    config.reps = opt.reps;
    config.warmup = opt.warmup;
    config.dup_fraction = opt.dup_fraction;
    config.input = opt.input;
    config.sort.mem_cap_bytes = opt.mem_cap_bytes;

    if (opt.csv.empty()) {
        ndsort::run_bench(config, &std::cout);
        return exit_ok;
    }
    std::ofstream out(opt.csv);
    if (!out) {
        throw usage_error("cannot write '" + opt.csv + "'");
    }
    ndsort::run_bench(config, &out);
    out.flush();
    if (!out) {
        throw usage_error("error writing '" + opt.csv + "'");
    }
    return exit_ok;
}

} // namespace

auto main(int argc, char** argv) -> int
{
    CLI::App app { "Non-dominated sorting: RankOrdinal, RankIntersect and reference sorters" };
    app.require_subcommand(1);

    Options opt;

    auto* sort = app.add_subcommand("sort", "rank one instance and print its fronts");
    add_common(sort, opt);
    sort->add_option("--algo", opt.algos, "ro|rs|ens-ss|ens-bs|naive (default rs)");
    sort->add_option("--gen", opt.gens, "uniform|single-front|chain|duplicates|file");

    auto* verify = app.add_subcommand("verify", "cross-check all sorters against the naive oracle");
    add_common(verify, opt);
    verify->add_option("--algo", opt.algos, "sorters to check (repeatable, default all)");
    verify->add_option("--gen", opt.gens, "generators (repeatable)");
    verify->add_option("--seeds", opt.seeds, "seeds per configuration");

    auto* bench = app.add_subcommand("bench", "time sorters and emit CSV");
    add_common(bench, opt);
    bench->add_option("--algo", opt.algos, "sorters to time (repeatable, default ro rs)");
    bench->add_option("--gen", opt.gens, "generator");
    bench->add_option("--seeds", opt.seeds, "seeds per configuration");
    bench->add_option("--reps", opt.reps, "timed runs per configuration");
    bench->add_option("--warmup", opt.warmup, "untimed runs before timing");
    bench->add_option("--csv", opt.csv, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const& e) {
        auto code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (sort->parsed()) {
            return cmd_sort(opt);
        }
        if (verify->parsed()) {
            return cmd_verify(opt);
        }
        return cmd_bench(opt);
    } catch (std::exception const& e) {
        std::cerr << "ndsort: " << e.what() << '\n';
        return exit_usage;
    }
}
