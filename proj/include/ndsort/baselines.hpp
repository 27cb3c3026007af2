// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_BASELINES_HPP
#define NDSORT_BASELINES_HPP

#include <algorithm>
#include <cstddef>
#include <vector>

#include "core.hpp"

namespace ndsort {

/// Fast non-dominated sort (Deb et al. 2002). O(M N^2) comparisons and
/// O(N^2) worst-case memory for the domination lists.
///
/// Accepts duplicate rows: equal vectors do not dominate each other and
/// end up in the same front. Every other sorter in the library is checked
/// against this one.
inline auto naive_fast_nds(ObjectiveMatrix const& obj, Counters& counters) -> RankAssignment
{
    auto const n = obj.size();
    std::vector<std::vector<std::size_t>> dominated(n);
    std::vector<std::size_t> dominator_count(n, 0);

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            ++counters.full_comparisons;
            switch (compare_dominance(obj.row(i), obj.row(j))) {
            case Dominance::first_dominates:
                dominated[i].push_back(j);
                ++dominator_count[j];
                break;
            case Dominance::second_dominates:
                dominated[j].push_back(i);
                ++dominator_count[i];
                break;
            default:
                break;
            }
        }
    }

    RankAssignment out;
    out.ranks.assign(n, 0);
    std::vector<std::size_t> front;
    for (std::size_t i = 0; i < n; ++i) {
        if (dominator_count[i] == 0) {
            front.push_back(i);
        }
    }
    std::vector<std::size_t> next;
    for (std::size_t rank = 1; !front.empty(); ++rank) {
        next.clear();
        for (auto i : front) {
            out.ranks[i] = rank;
            for (auto j : dominated[i]) {
                if (--dominator_count[j] == 0) {
                    next.push_back(j);
                }
            }
        }
        std::swap(front, next);
    }
    return out;
}

inline auto naive_fast_nds(ObjectiveMatrix const& obj) -> RankAssignment
{
    Counters counters;
    return naive_fast_nds(obj, counters);
}

namespace detail {
    // Efficient non-dominated sort (Zhang et al. 2015). Solutions are inserted
    // in lexicographic order, so nobody can be dominated by a later one.
    template <bool BinarySearch>
    auto efficient_sort(ObjectiveMatrix const& obj, Counters& counters) -> RankAssignment
    {
        auto order = lexicographic_order(obj);
        require_distinct_rows(obj, order);

        std::vector<std::vector<std::size_t>> fronts;
        RankAssignment out;
        out.ranks.assign(obj.size(), 0);

        // most recent insertions first: they are the likeliest dominators
        auto dominated_by = [&](std::vector<std::size_t> const& front, std::size_t i) {
            return std::any_of(front.rbegin(), front.rend(), [&](auto j) {
                ++counters.full_comparisons;
                return dominates(obj.row(j), obj.row(i));
            });
        };

        for (auto i : order) {
            std::vector<std::vector<std::size_t>>::iterator it;
            if constexpr (BinarySearch) {
                it = std::partition_point(fronts.begin(), fronts.end(), [&](auto const& f) { return dominated_by(f, i); });
            } else {
                it = std::find_if(fronts.begin(), fronts.end(), [&](auto const& f) { return !dominated_by(f, i); });
            }
            auto const rank = static_cast<std::size_t>(it - fronts.begin());
            if (it == fronts.end()) {
                fronts.emplace_back();
            }
            fronts[rank].push_back(i);
            out.ranks[i] = rank + 1;
        }
        return out;
    }
} // namespace detail

inline auto ens_ss(ObjectiveMatrix const& obj, Counters& counters) -> RankAssignment
{
    return detail::efficient_sort<false>(obj, counters);
}

inline auto ens_bs(ObjectiveMatrix const& obj, Counters& counters) -> RankAssignment
{
    return detail::efficient_sort<true>(obj, counters);
}

inline auto ens_ss(ObjectiveMatrix const& obj) -> RankAssignment
{
    Counters counters;
    return ens_ss(obj, counters);
}

inline auto ens_bs(ObjectiveMatrix const& obj) -> RankAssignment
{
    Counters counters;
    return ens_bs(obj, counters);
}

} // namespace ndsort

#endif
