// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_RANKS_HPP
#define NDSORT_RANKS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ndsort {

/// Per-solution domination rank, 1-based (rank 1 is the non-dominated set).
struct RankAssignment {
    std::vector<std::size_t> ranks;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return ranks.size(); }
    [[nodiscard]] auto operator[](std::size_t i) const noexcept -> std::size_t { return ranks[i]; }

    [[nodiscard]] auto max_rank() const noexcept -> std::size_t
    {
        return ranks.empty() ? 0 : *std::max_element(ranks.begin(), ranks.end());
    }

    auto operator==(RankAssignment const&) const -> bool = default;
};

/// fronts[r] holds the 0-based indices of every solution with rank r + 1, ascending.
struct FrontPartition {
    std::vector<std::vector<std::size_t>> fronts;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return fronts.size(); }
    [[nodiscard]] auto operator[](std::size_t r) const noexcept -> std::vector<std::size_t> const& { return fronts[r]; }

    auto operator==(FrontPartition const&) const -> bool = default;
};

/// Work counters used to check the complexity claims of the rank-based sorters.
struct Counters {
    std::uint64_t inner_iterations {};
    std::uint64_t full_comparisons {};
    std::uint64_t rank_updates {};
    std::uint64_t block_ops {};

    auto operator+=(Counters const& other) noexcept -> Counters&
    {
        inner_iterations += other.inner_iterations;
        full_comparisons += other.full_comparisons;
        rank_updates += other.rank_updates;
        block_ops += other.block_ops;
        return *this;
    }

    auto operator==(Counters const&) const -> bool = default;
};

// sum over solutions of (rank - 1); the number of unit rank increments needed
// to move every solution from rank 1 to its final front
inline auto rank_excess(RankAssignment const& r) noexcept -> std::uint64_t
{
    std::uint64_t sum = 0;
    for (auto v : r.ranks) {
        sum += v - 1;
    }
    return sum;
}

inline auto fronts_from_ranks(RankAssignment const& r) -> FrontPartition
{
    FrontPartition fp;
    if (r.ranks.empty()) {
        return fp;
    }
    auto const max_rank = r.max_rank();
    if (std::find(r.ranks.begin(), r.ranks.end(), 0) != r.ranks.end()) {
        throw consistency_error("rank assignment contains rank 0");
    }
    if (max_rank > r.ranks.size()) {
        throw consistency_error("rank assignment has gaps: max rank " + std::to_string(max_rank)
            + " exceeds solution count");
    }
    fp.fronts.resize(max_rank);
    for (std::size_t i = 0; i < r.ranks.size(); ++i) {
        fp.fronts[r.ranks[i] - 1].push_back(i);
    }
    for (std::size_t f = 0; f < fp.fronts.size(); ++f) {
        if (fp.fronts[f].empty()) {
            throw consistency_error("rank assignment has a gap at rank " + std::to_string(f + 1));
        }
    }
    return fp;
}

} // namespace ndsort

#endif
