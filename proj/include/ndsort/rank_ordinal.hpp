// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_RANK_ORDINAL_HPP
#define NDSORT_RANK_ORDINAL_HPP

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <utility>
#include <vector>

#include "core.hpp"

namespace ndsort {

namespace detail {
    struct no_visit {
        constexpr auto operator()(std::size_t /*solution*/, std::size_t /*rank*/) const noexcept -> void { }
    };
} // namespace detail

/// RankOrdinal ranking phase on precomputed sort orders.
///
/// Solutions are visited in the order of column 0. For each solution i only
/// the successors of i in the column where i sits furthest right are
/// scanned, since that column leaves the fewest candidates. A successor j
/// that currently shares i's rank is compared on ordinal ranks; if i is
/// ahead of j in every column, i dominates j and j moves to the next rank.
///
/// `on_visit(i, rank)` is called when i is reached by the outer loop, at
/// which point its rank is final.
template <typename Visit = detail::no_visit>
auto rank_ordinal(PermutationMatrix const& p, OrdinalRankMatrix const& r, Counters& counters, Visit&& on_visit = {})
    -> RankAssignment
{
    auto const n = p.size();
    auto const m = p.objectives();
    if (r.size() != n || r.objectives() != m) {
        throw dimension_error("rank_ordinal: permutation and rank matrices differ in shape");
    }

    std::vector<std::size_t> rank(n, 1);
    for (auto i : p.column(0)) {
        auto ri = r.row(i);
        on_visit(i, rank[i]);

        auto const k = static_cast<std::size_t>(std::distance(ri.begin(), std::max_element(ri.begin(), ri.end())));
        auto const successors = p.column(k).subspan(ri[k] + 1);
        auto const rank_i = rank[i];

        for (auto j : successors) {
            ++counters.inner_iterations;
            if (rank[j] != rank_i) {
                continue;
            }
            ++counters.full_comparisons;
            auto rj = r.row(j);
            bool dominated = true;
            for (std::size_t l = 0; l < m; ++l) {
                dominated &= ri[l] < rj[l];
            }
            if (dominated) {
                rank[j] = rank_i + 1;
                ++counters.rank_updates;
            }
        }
    }
    return { std::move(rank) };
}

/// RankOrdinal non-dominated sorting. The input must not contain equal rows;
/// see deduplicate().
template <typename Visit = detail::no_visit>
auto rank_ordinal_sort(ObjectiveMatrix const& obj, Counters& counters, Visit&& on_visit = {}) -> RankAssignment
{
    auto p = build_permutations(obj);
    require_distinct_rows(obj, p.column(0));
    auto r = build_ordinal_ranks(p);
    return rank_ordinal(p, r, counters, std::forward<Visit>(on_visit));
}

inline auto rank_ordinal_sort(ObjectiveMatrix const& obj) -> RankAssignment
{
    Counters counters;
    return rank_ordinal_sort(obj, counters);
}

} // namespace ndsort

#endif
