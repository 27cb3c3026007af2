// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_RANK_INTERSECT_HPP
#define NDSORT_RANK_INTERSECT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"
#include "core.hpp"

namespace ndsort {

struct RankIntersectOptions {
    // Upper bound on the N * ceil(N/64) * 8 bytes needed for the dominance sets.
    std::uint64_t mem_cap_bytes { std::uint64_t { 2 } << 30 };
};

/// Snapshot handed to the rank-set observer. Bit positions and ranks are
/// indexed by position in column 0 of the permutation matrix.
struct RankIntersectState {
    std::span<BlockBitset const> rank_sets;
    std::span<std::size_t const> rank_by_position;
};

namespace detail {
    struct no_observe {
        constexpr auto operator()(RankIntersectState const& /*state*/) const noexcept -> void { }
    };
} // namespace detail

inline auto rank_intersect_bytes(std::size_t n) noexcept -> std::uint64_t
{
    std::uint64_t const blocks = (n + BlockBitset::block_bits - 1) / BlockBitset::block_bits;
    return std::uint64_t { n } * blocks * sizeof(BlockBitset::block_type);
}

inline auto require_rank_intersect_capacity(std::size_t n, RankIntersectOptions const& options) -> void
{
    if (auto bytes = rank_intersect_bytes(n); bytes > options.mem_cap_bytes) {
        throw capacity_error("rank_intersect: " + std::to_string(n) + " solutions need " + std::to_string(bytes)
            + " bytes of dominance sets, cap is " + std::to_string(options.mem_cap_bytes));
    }
}

/// RankIntersect on a precomputed permutation matrix.
///
/// Solutions are identified by their position in column 0. The dominance
/// set of a solution starts as everything after it in column 0 and is
/// intersected with "everything after it" in each further column, which
/// leaves exactly the solutions it dominates. During the sweep over the
/// last column each set is also intersected with the set of solutions at
/// the solution's current rank; the survivors are moved one rank down.
///
/// No objective values are consulted here. `on_update` sees the rank sets
/// after every single rank change.
template <typename Observe = detail::no_observe>
auto rank_intersect(PermutationMatrix const& p, Counters& counters, RankIntersectOptions const& options = {},
    Observe&& on_update = {}) -> RankAssignment
{
    auto const n = p.size();
    auto const m = p.objectives();
    require_rank_intersect_capacity(n, options);

    auto const lex = p.column(0);
    std::vector<std::size_t> position(n);
    for (std::size_t q = 0; q < n; ++q) {
        position[lex[q]] = q;
    }

    // dominance sets, from the successors in column 0
    auto work = BlockBitset::full(n);
    std::vector<BlockBitset> dominance;
    dominance.reserve(n);
    for (std::size_t q = 0; q < n; ++q) {
        work.remove(q);
        dominance.push_back(work);
    }

    // middle columns
    for (std::size_t k = 1; k + 1 < m; ++k) {
        work = BlockBitset::full(n);
        for (auto i : p.column(k)) {
            auto const x = position[i];
            work.remove(x);
            intersect_assign(dominance[x], work, counters);
        }
    }

    // last column: finish the dominance sets and assign ranks
    std::vector<std::size_t> rank(n, 1);
    std::vector<BlockBitset> rank_sets;
    rank_sets.push_back(BlockBitset::full(n));

    auto const last = m - 1;
    work = BlockBitset::full(n);
    for (auto i : p.column(last)) {
        auto const x = position[i];
        auto& successors = dominance[x];
        if (last != 0) {
            work.remove(x);
            intersect_assign(successors, work, counters);
        }
        auto const r = rank[x];
        intersect_assign(successors, rank_sets[r - 1], counters);
        if (successors.is_empty()) {
            continue;
        }
        if (rank_sets.size() == r) {
            rank_sets.push_back(BlockBitset::empty(n));
        }
        for (auto j : successors) {
            rank_sets[r - 1].remove(j);
            rank_sets[r].insert(j);
            rank[j] = r + 1;
            ++counters.rank_updates;
            on_update(RankIntersectState { rank_sets, rank });
        }
    }

    RankAssignment out;
    out.ranks.resize(n);
    for (std::size_t q = 0; q < n; ++q) {
        out.ranks[lex[q]] = rank[q];
    }
    return out;
}

/// RankIntersect non-dominated sorting. The input must not contain equal
/// rows; see deduplicate().
template <typename Observe = detail::no_observe>
auto rank_intersect_sort(ObjectiveMatrix const& obj, Counters& counters, RankIntersectOptions const& options = {},
    Observe&& on_update = {}) -> RankAssignment
{
    require_rank_intersect_capacity(obj.size(), options);
    auto p = build_permutations(obj);
    require_distinct_rows(obj, p.column(0));
    return rank_intersect(p, counters, options, std::forward<Observe>(on_update));
}

inline auto rank_intersect_sort(ObjectiveMatrix const& obj) -> RankAssignment
{
    Counters counters;
    return rank_intersect_sort(obj, counters);
}

} // namespace ndsort

#endif
