// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_DUPLICATES_HPP
#define NDSORT_DUPLICATES_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "objective_matrix.hpp"
#include "ranks.hpp"

namespace ndsort {

/// Groups solutions with bitwise-identical objective vectors.
struct DuplicateMap {
    // representative[i]: first index whose row equals row i
    std::vector<std::size_t> representative;
    // representatives in first-occurrence order
    std::vector<std::size_t> unique_indices;
    // unique_position[i]: position of representative[i] within unique_indices
    std::vector<std::size_t> unique_position;

    [[nodiscard]] auto has_duplicates() const noexcept -> bool
    {
        return unique_indices.size() != representative.size();
    }
};

namespace detail {
    struct RowRef {
        ObjectiveMatrix const* obj;
        std::size_t index;
    };

    struct RowHash {
        auto operator()(RowRef r) const noexcept -> std::size_t
        {
            std::uint64_t h = 0x9e3779b97f4a7c15ULL;
            for (double v : r.obj->row(r.index)) {
                h ^= std::bit_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            }
            return static_cast<std::size_t>(h);
        }
    };

    struct RowEqual {
        auto operator()(RowRef a, RowRef b) const noexcept -> bool
        {
            auto ra = a.obj->row(a.index);
            auto rb = b.obj->row(b.index);
            return std::equal(ra.begin(), ra.end(), rb.begin(), [](double x, double y) {
                return std::bit_cast<std::uint64_t>(x) == std::bit_cast<std::uint64_t>(y);
            });
        }
    };
} // namespace detail

/// Returns the unique rows in first-occurrence order and the map back to the input.
inline auto deduplicate(ObjectiveMatrix const& obj) -> std::pair<ObjectiveMatrix, DuplicateMap>
{
    auto const n = obj.size();
    auto const m = obj.objectives();

    DuplicateMap map;
    map.representative.resize(n);
    map.unique_position.resize(n);

    std::unordered_map<detail::RowRef, std::size_t, detail::RowHash, detail::RowEqual> seen;
    seen.reserve(n);
    std::vector<double> values;
    values.reserve(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        auto [it, inserted] = seen.try_emplace(detail::RowRef { &obj, i }, map.unique_indices.size());
        if (inserted) {
            map.unique_indices.push_back(i);
            auto row = obj.row(i);
            values.insert(values.end(), row.begin(), row.end());
        }
        map.unique_position[i] = it->second;
        map.representative[i] = map.unique_indices[it->second];
    }
    auto unique_count = map.unique_indices.size();
    return { ObjectiveMatrix(unique_count, m, std::move(values)), std::move(map) };
}

/// Expands ranks computed on the unique rows back to every original index.
inline auto reinsert_duplicates(RankAssignment const& unique_ranks, DuplicateMap const& map) -> RankAssignment
{
    if (unique_ranks.size() != map.unique_indices.size()) {
        throw consistency_error("reinsert_duplicates: " + std::to_string(unique_ranks.size())
            + " ranks for " + std::to_string(map.unique_indices.size()) + " unique solutions");
    }
    RankAssignment out;
    out.ranks.resize(map.representative.size());
    for (std::size_t i = 0; i < out.ranks.size(); ++i) {
        out.ranks[i] = unique_ranks.ranks[map.unique_position[i]];
    }
    return out;
}

/// Throws precondition_error when two rows are equal. `lex` must be the
/// lexicographic order of the rows, which puts equal rows next to each other.
inline auto require_distinct_rows(ObjectiveMatrix const& obj, std::span<std::size_t const> lex) -> void
{
    for (std::size_t q = 1; q < lex.size(); ++q) {
        auto a = obj.row(lex[q - 1]);
        auto b = obj.row(lex[q]);
        if (std::equal(a.begin(), a.end(), b.begin())) {
            auto [lo, hi] = std::minmax(lex[q - 1], lex[q]);
            throw precondition_error("solutions " + std::to_string(lo) + " and " + std::to_string(hi)
                + " have equal objective vectors; run deduplicate first");
        }
    }
}

} // namespace ndsort

#endif
