// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#include <iostream>

#include "ndsort/ndsort.hpp"

auto main() -> int
{
    // two objectives, both minimized; rows 1 and 4 are identical
    ndsort::ObjectiveMatrix obj {
        { 0.79, 0.35 },
        { 0.40, 0.71 },
        { 0.15, 0.014 },
        { 0.40, 0.71 },
        { 0.96, 0.83 },
    };

    // the rank-based sorters require distinct rows
    auto [unique, map] = ndsort::deduplicate(obj);

    ndsort::Counters counters;
    auto ranks = ndsort::rank_intersect_sort(unique, counters);
    auto fronts = ndsort::fronts_from_ranks(ndsort::reinsert_duplicates(ranks, map));

    ndsort::print_fronts(std::cout, fronts);
    std::cout << "rank updates: " << counters.rank_updates << ", block ops: " << counters.block_ops << '\n';
}
