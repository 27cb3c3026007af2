// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_BENCH_HPP
#define NDSORT_BENCH_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "baselines.hpp"
#include "core.hpp"
#include "generators.hpp"
#include "rank_intersect.hpp"
#include "rank_ordinal.hpp"

namespace ndsort {

enum class Algorithm {
    rank_ordinal,
    rank_intersect,
    ens_ss,
    ens_bs,
    naive,
};

inline constexpr Algorithm all_algorithms[] = {
    Algorithm::rank_ordinal,
    Algorithm::rank_intersect,
    Algorithm::ens_ss,
    Algorithm::ens_bs,
    Algorithm::naive,
};

constexpr auto to_string(Algorithm algo) noexcept -> std::string_view
{
    switch (algo) {
    case Algorithm::rank_ordinal:
        return "ro";
    case Algorithm::rank_intersect:
        return "rs";
    case Algorithm::ens_ss:
        return "ens-ss";
    case Algorithm::ens_bs:
        return "ens-bs";
    case Algorithm::naive:
        return "naive";
    }
    return "?";
}

inline auto parse_algorithm(std::string_view name) -> std::optional<Algorithm>
{
    for (auto algo : all_algorithms) {
        if (name == to_string(algo)) {
            return algo;
        }
    }
    return std::nullopt;
}

struct SortOptions {
    std::uint64_t mem_cap_bytes { RankIntersectOptions {}.mem_cap_bytes };
};

/// Runs one algorithm on a duplicate-free matrix.
inline auto run_algorithm(Algorithm algo, ObjectiveMatrix const& unique, Counters& counters, SortOptions const& options = {})
    -> RankAssignment
{
    switch (algo) {
    case Algorithm::rank_ordinal:
        return rank_ordinal_sort(unique, counters);
    case Algorithm::rank_intersect:
        return rank_intersect_sort(unique, counters, RankIntersectOptions { options.mem_cap_bytes });
    case Algorithm::ens_ss:
        return ens_ss(unique, counters);
    case Algorithm::ens_bs:
        return ens_bs(unique, counters);
    case Algorithm::naive:
        return naive_fast_nds(unique, counters);
    }
    throw input_error("unknown algorithm");
}

/// deduplicate -> algorithm -> reinsert; accepts any valid matrix.
inline auto sort_solutions(Algorithm algo, ObjectiveMatrix const& obj, Counters& counters, SortOptions const& options = {})
    -> RankAssignment
{
    auto [unique, map] = deduplicate(obj);
    auto ranks = run_algorithm(algo, unique, counters, options);
    return reinsert_duplicates(ranks, map);
}

inline auto sort_solutions(Algorithm algo, ObjectiveMatrix const& obj, SortOptions const& options = {}) -> RankAssignment
{
    Counters counters;
    return sort_solutions(algo, obj, counters, options);
}

/// Order-independent digest of a rank assignment: the wrapping sum of a
/// mixed (index, rank) hash over all solutions.
inline auto rank_checksum(RankAssignment const& r) noexcept -> std::uint64_t
{
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < r.ranks.size(); ++i) {
        sum += mix((std::uint64_t { i } << 32) ^ r.ranks[i]);
    }
    return sum;
}

/// Writes one line per front, "F<r>: i1 i2 ...", with 1-based solution indices.
inline auto print_fronts(std::ostream& out, FrontPartition const& fronts) -> void
{
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        out << 'F' << r + 1 << ':';
        for (auto i : fronts[r]) {
            out << ' ' << i + 1;
        }
        out << '\n';
    }
}

struct RunRecord {
    std::string algo;
    std::string gen;
    std::size_t n {};
    std::size_t m {};
    std::uint64_t seed {};
    std::size_t rep {};
    std::uint64_t elapsed_ns {};
    Counters counters;
    std::size_t max_rank {};
    std::uint64_t checksum {};
    // set when the algorithm refused the instance (memory cap)
    bool skipped {};
};

inline constexpr std::string_view csv_header
    = "algo,gen,n,m,seed,rep,elapsed_ns,inner_iterations,full_comparisons,rank_updates,block_ops,max_rank,checksum";

inline auto write_csv_row(std::ostream& out, RunRecord const& rec) -> void
{
    out << rec.algo << ',' << rec.gen << ',' << rec.n << ',' << rec.m << ',' << rec.seed << ',' << rec.rep << ',';
    if (rec.skipped) {
        out << "skipped,,,,,,\n";
        return;
    }
    auto const& c = rec.counters;
    out << rec.elapsed_ns << ',' << c.inner_iterations << ',' << c.full_comparisons << ',' << c.rank_updates << ','
        << c.block_ops << ',' << rec.max_rank << ',' << rec.checksum << '\n';
}

struct BenchConfig {
    std::vector<Algorithm> algos { Algorithm::rank_ordinal, Algorithm::rank_intersect };
    GeneratorKind gen { GeneratorKind::uniform };
    std::vector<std::size_t> ns { 1000 };
    std::vector<std::size_t> ms { 3 };
    std::uint64_t seed { 0 };
    std::size_t seeds { 1 };
    std::size_t reps { 5 };
    std::size_t warmup { 2 };
    double dup_fraction { 0.3 };
    std::string input;
    SortOptions sort;
};

/// Times every (instance, algorithm) pair `reps` times after `warmup`
/// untimed runs, sequentially on the calling thread. Instance seeds are
/// seed, seed + 1, ..., seed + seeds - 1. Only the sort call on the
/// already deduplicated matrix is timed. Returns the records, and writes
/// them as CSV rows (header first) when `csv` is given.
inline auto run_bench(BenchConfig const& config, std::ostream* csv = nullptr) -> std::vector<RunRecord>
{
    using clock = std::chrono::steady_clock;
    std::vector<RunRecord> records;
    if (csv != nullptr) {
        *csv << csv_header << '\n';
    }

    auto emit = [&](RunRecord rec) {
        if (csv != nullptr) {
            write_csv_row(*csv, rec);
        }
        records.push_back(std::move(rec));
    };

    auto bench_instance = [&](ObjectiveMatrix const& obj, std::uint64_t seed) {
        auto [unique, map] = deduplicate(obj);
        for (auto algo : config.algos) {
            RunRecord base;
            base.algo = to_string(algo);
            base.gen = to_string(config.gen);
            base.n = obj.size();
            base.m = obj.objectives();
            base.seed = seed;

            if (algo == Algorithm::rank_intersect && rank_intersect_bytes(unique.size()) > config.sort.mem_cap_bytes) {
                for (std::size_t rep = 0; rep < config.reps; ++rep) {
                    auto rec = base;
                    rec.rep = rep;
                    rec.skipped = true;
                    emit(std::move(rec));
                }
                continue;
            }

            for (std::size_t w = 0; w < config.warmup; ++w) {
                Counters scratch;
                static_cast<void>(run_algorithm(algo, unique, scratch, config.sort));
            }
            for (std::size_t rep = 0; rep < config.reps; ++rep) {
                auto rec = base;
                rec.rep = rep;
                auto const start = clock::now();
                auto ranks = run_algorithm(algo, unique, rec.counters, config.sort);
                auto const stop = clock::now();
                auto const ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
                rec.elapsed_ns = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(ns));
                auto full = reinsert_duplicates(ranks, map);
                rec.max_rank = full.max_rank();
                rec.checksum = rank_checksum(full);
                emit(std::move(rec));
            }
        }
    };

    if (config.gen == GeneratorKind::file) {
        bench_instance(read_matrix(config.input), config.seed);
        return records;
    }
    for (auto n : config.ns) {
        for (auto m : config.ms) {
            for (std::size_t s = 0; s < config.seeds; ++s) {
                GeneratorSpec spec { config.gen, n, m, config.seed + s, config.dup_fraction, {} };
                bench_instance(generate(spec), spec.seed);
            }
        }
    }
    return records;
}

struct NamedSorter {
    std::string name;
    std::function<RankAssignment(ObjectiveMatrix const&)> sort;
};

inline auto default_sorters(SortOptions const& options = {}) -> std::vector<NamedSorter>
{
    std::vector<NamedSorter> sorters;
    for (auto algo : all_algorithms) {
        sorters.push_back({ std::string(to_string(algo)),
            [algo, options](ObjectiveMatrix const& obj) { return sort_solutions(algo, obj, options); } });
    }
    return sorters;
}

struct VerifyConfig {
    std::vector<GeneratorKind> gens { GeneratorKind::uniform, GeneratorKind::single_front, GeneratorKind::chain,
        GeneratorKind::duplicates };
    std::vector<std::size_t> ns { 10, 50, 200 };
    std::vector<std::size_t> ms { 2, 3, 5 };
    std::uint64_t seed { 0 };
    std::size_t seeds { 20 };
    double dup_fraction { 0.3 };
    std::string input; // used by the file generator
};

struct Mismatch {
    std::string algo;
    GeneratorKind gen {};
    std::size_t n {};
    std::size_t m {};
    std::uint64_t seed {};
    std::string detail;
};

struct VerifyReport {
    std::size_t instances {};
    std::size_t checks {};
    std::vector<Mismatch> mismatches;

    [[nodiscard]] auto ok() const noexcept -> bool { return mismatches.empty(); }
};

/// Compares every sorter against naive_fast_nds on the full (not
/// deduplicated) instance of every configuration in the sweep. Mismatches
/// are printed to `log` as they are found.
inline auto run_verify(VerifyConfig const& config, std::span<NamedSorter const> sorters, std::ostream& log)
    -> VerifyReport
{
    VerifyReport report;

    auto check = [&](ObjectiveMatrix const& obj, GeneratorSpec const& spec) {
        ++report.instances;
        auto const reference = naive_fast_nds(obj);
        for (auto const& sorter : sorters) {
            ++report.checks;
            Mismatch mm { sorter.name, spec.kind, obj.size(), obj.objectives(), spec.seed, {} };
            try {
                auto got = sorter.sort(obj);
                if (got == reference) {
                    continue;
                }
                if (got.size() != reference.size()) {
                    mm.detail = "returned " + std::to_string(got.size()) + " ranks";
                } else {
                    std::size_t i = 0;
                    while (got[i] == reference[i]) {
                        ++i;
                    }
                    mm.detail = "solution " + std::to_string(i + 1) + ": expected rank "
                        + std::to_string(reference[i]) + ", got " + std::to_string(got[i]);
                }
            } catch (std::exception const& e) {
                mm.detail = std::string("threw: ") + e.what();
            }
            log << "mismatch: algo=" << mm.algo << " gen=" << to_string(mm.gen) << " n=" << mm.n << " m=" << mm.m
                << " seed=" << mm.seed << " (" << mm.detail << ")\n";
            report.mismatches.push_back(std::move(mm));
        }
    };

    for (auto gen : config.gens) {
        if (gen == GeneratorKind::file) {
            GeneratorSpec spec { gen, 0, 0, config.seed, config.dup_fraction, config.input };
            check(generate(spec), spec);
            continue;
        }
        for (auto n : config.ns) {
            for (auto m : config.ms) {
                if (gen == GeneratorKind::single_front && m < 2) {
                    continue;
                }
                for (std::size_t s = 0; s < config.seeds; ++s) {
                    GeneratorSpec spec { gen, n, m, config.seed + s, config.dup_fraction, {} };
                    check(generate(spec), spec);
                }
            }
        }
    }
    return report;
}

} // namespace ndsort

#endif
