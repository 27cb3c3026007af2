// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#include <random>

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "ndsort/baselines.hpp"
#include "oracles.hpp"

using ::testing::ElementsAre;

namespace ndsort {
namespace {

    TEST(NaiveFastNds, WorkedExample)
    {
        EXPECT_EQ(fronts_from_ranks(naive_fast_nds(test::worked_example())), test::worked_example_fronts());
    }

    TEST(NaiveFastNds, EqualRowsShareAFront)
    {
        EXPECT_THAT(naive_fast_nds(ObjectiveMatrix { { 0.5, 0.5 }, { 0.5, 0.5 } }).ranks, ElementsAre(1, 1));
        EXPECT_THAT(naive_fast_nds(ObjectiveMatrix { { 0.5, 0.5 }, { 0.9, 0.9 }, { 0.5, 0.5 } }).ranks, ElementsAre(1, 2, 1));
    }

    TEST(NaiveFastNds, FrontsAreValidAndMatchLongestChain)
    {
        std::mt19937_64 rng(1);
        for (int trial = 0; trial < 40; ++trial) {
            // duplicates allowed here
            auto obj = test::tied_matrix(rng, 1 + rng() % 150, 1 + trial % 4, 4);
            auto ranks = naive_fast_nds(obj);
            ASSERT_EQ(test::front_partition_violation(obj, fronts_from_ranks(ranks)), "");
            ASSERT_EQ(ranks, test::longest_chain_ranks(obj));
        }
    }

    TEST(NaiveFastNds, CountsPairwiseComparisons)
    {
        Counters c;
        naive_fast_nds(test::worked_example(), c);
        EXPECT_EQ(c.full_comparisons, 45U);
    }

    TEST(EfficientSort, WorkedExample)
    {
        EXPECT_EQ(fronts_from_ranks(ens_ss(test::worked_example())), test::worked_example_fronts());
        EXPECT_EQ(fronts_from_ranks(ens_bs(test::worked_example())), test::worked_example_fronts());
    }

    TEST(EfficientSort, SortedChain)
    {
        ObjectiveMatrix obj { { 1, 1, 1 }, { 2, 2, 2 }, { 3, 3, 3 }, { 4, 4, 4 } };
        EXPECT_THAT(ens_ss(obj).ranks, ElementsAre(1, 2, 3, 4));
        EXPECT_THAT(ens_bs(obj).ranks, ElementsAre(1, 2, 3, 4));
    }

    TEST(EfficientSort, RejectsDuplicates)
    {
        ObjectiveMatrix obj { { 1, 2 }, { 1, 2 } };
        EXPECT_THROW(ens_ss(obj), precondition_error);
        EXPECT_THROW(ens_bs(obj), precondition_error);
    }

    TEST(EfficientSort, MatchesOracle)
    {
        std::mt19937_64 rng(2);
        for (int seed = 0; seed < 200; ++seed) {
            auto const m = std::size_t { 2 } + seed % 5;
            auto const n = 1 + rng() % 500;
            auto obj = seed % 2 == 0 ? test::random_matrix(rng, n, m)
                                     : test::distinct_rows(test::tied_matrix(rng, n, m, 4));
            auto expected = naive_fast_nds(obj);
            auto ss = ens_ss(obj);
            auto bs = ens_bs(obj);
            ASSERT_EQ(ss, expected) << "seed " << seed;
            ASSERT_EQ(bs, expected) << "seed " << seed;
        }
    }

} // namespace
} // namespace ndsort
