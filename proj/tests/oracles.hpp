// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

// Test-only reference implementations. Nothing here calls into the sorters
// under test.

#ifndef NDSORT_TESTS_ORACLES_HPP
#define NDSORT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "ndsort/core.hpp"

namespace ndsort::test {

// Insertion sort: moves an element left only past strictly greater keys.
template <typename Less>
auto stable_insertion_sort(std::vector<std::size_t> v, Less less) -> std::vector<std::size_t>
{
    for (std::size_t i = 1; i < v.size(); ++i) {
        auto x = v[i];
        auto j = i;
        while (j > 0 && less(x, v[j - 1])) {
            v[j] = v[j - 1];
            --j;
        }
        v[j] = x;
    }
    return v;
}

inline auto strictly_dominates(ObjectiveMatrix const& obj, std::size_t a, std::size_t b) -> bool
{
    bool strictly_better = false;
    for (std::size_t k = 0; k < obj.objectives(); ++k) {
        if (obj(a, k) > obj(b, k)) {
            return false;
        }
        strictly_better |= obj(a, k) < obj(b, k);
    }
    return strictly_better;
}

// rank(i) = 1 + length of the longest chain of dominators above i, by
// memoized recursion over the dominance relation. Independent of the
// front-peeling procedure in naive_fast_nds.
inline auto longest_chain_ranks(ObjectiveMatrix const& obj) -> RankAssignment
{
    auto const n = obj.size();
    std::vector<std::size_t> rank(n, 0);
    std::function<std::size_t(std::size_t)> depth = [&](std::size_t i) -> std::size_t {
        if (rank[i] != 0) {
            return rank[i];
        }
        std::size_t best = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (strictly_dominates(obj, j, i)) {
                best = std::max(best, depth(j));
            }
        }
        return rank[i] = best + 1;
    };
    for (std::size_t i = 0; i < n; ++i) {
        depth(i);
    }
    return { rank };
}

// Empty string when `fp` is a valid front partition of `obj`; a description
// of the first violation otherwise.
inline auto front_partition_violation(ObjectiveMatrix const& obj, FrontPartition const& fp) -> std::string
{
    std::vector<int> seen(obj.size(), 0);
    for (auto const& front : fp.fronts) {
        for (auto i : front) {
            if (i >= obj.size() || seen[i]++ != 0) {
                return "index " + std::to_string(i) + " missing bounds or repeated";
            }
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != static_cast<std::ptrdiff_t>(obj.size())) {
        return "fronts do not cover every solution";
    }
    for (std::size_t f = 0; f < fp.size(); ++f) {
        for (auto a : fp[f]) {
            for (auto b : fp[f]) {
                if (strictly_dominates(obj, a, b)) {
                    return "front " + std::to_string(f + 1) + ": " + std::to_string(a) + " dominates " + std::to_string(b);
                }
            }
        }
        if (f == 0) {
            continue;
        }
        for (auto b : fp[f]) {
            auto const& prev = fp[f - 1];
            if (std::none_of(prev.begin(), prev.end(), [&](auto a) { return strictly_dominates(obj, a, b); })) {
                return "solution " + std::to_string(b) + " in front " + std::to_string(f + 1)
                    + " has no dominator in the previous front";
            }
        }
    }
    return {};
}

inline auto random_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m) -> ObjectiveMatrix
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<double> v(n * m);
    for (auto& x : v) {
        x = u(rng);
    }
    return { n, m, std::move(v) };
}

// Values on a coarse grid so that per-objective ties are common.
inline auto tied_matrix(std::mt19937_64& rng, std::size_t n, std::size_t m, int levels) -> ObjectiveMatrix
{
    std::uniform_int_distribution<int> u(0, levels - 1);
    std::vector<double> v(n * m);
    for (auto& x : v) {
        x = u(rng) / static_cast<double>(levels);
    }
    return { n, m, std::move(v) };
}

// Removes repeated rows, keeping first occurrences. Independent of deduplicate().
inline auto distinct_rows(ObjectiveMatrix const& obj) -> ObjectiveMatrix
{
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < obj.size(); ++i) {
        std::vector<double> r(obj.row(i).begin(), obj.row(i).end());
        if (std::find(rows.begin(), rows.end(), r) == rows.end()) {
            rows.push_back(std::move(r));
        }
    }
    return ObjectiveMatrix::from_rows(rows);
}

// The ten-point instance from the RankOrdinal walkthrough.
inline auto worked_example() -> ObjectiveMatrix
{
    return {
        { 0.79, 0.35 },
        { 0.40, 0.71 },
        { 0.15, 0.014 },
        { 0.46, 0.82 },
        { 0.28, 0.98 },
        { 0.31, 0.74 },
        { 0.82, 0.52 },
        { 0.84, 0.19 },
        { 0.85, 0.78 },
        { 0.96, 0.83 },
    };
}

// F1={3}, F2={1,2,5,6,8}, F3={4,7}, F4={9}, F5={10}, converted to 0-based
inline auto worked_example_fronts() -> FrontPartition
{
    return { { { 2 }, { 0, 1, 4, 5, 7 }, { 3, 6 }, { 8 }, { 9 } } };
}

template <typename T>
auto to_vector(std::span<T const> s) -> std::vector<T>
{
    return { s.begin(), s.end() };
}

inline auto to_one_based(std::vector<std::size_t> v) -> std::vector<std::size_t>
{
    for (auto& x : v) {
        ++x;
    }
    return v;
}

} // namespace ndsort::test

#endif
