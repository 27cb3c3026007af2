// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_PERMUTATION_HPP
#define NDSORT_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "objective_matrix.hpp"

namespace ndsort {

namespace detail {
    inline auto is_permutation_of_iota(std::span<std::size_t const> column) -> bool
    {
        std::vector<bool> seen(column.size(), false);
        for (auto v : column) {
            if (v >= column.size() || seen[v]) {
                return false;
            }
            seen[v] = true;
        }
        return true;
    }
} // namespace detail

/// Objective-wise sort orders. Column k lists solution indices (0-based) in
/// non-decreasing order of objective k. Stored column-major.
class PermutationMatrix {
public:
    explicit PermutationMatrix(std::vector<std::vector<std::size_t>> const& columns)
    {
        if (columns.empty() || columns.front().empty()) {
            throw input_error("permutation matrix needs at least one row and one column");
        }
        n_ = columns.front().size();
        m_ = columns.size();
        data_.reserve(n_ * m_);
        for (auto const& col : columns) {
            if (col.size() != n_) {
                throw dimension_error("permutation matrix: columns of different length");
            }
            if (!detail::is_permutation_of_iota(col)) {
                throw consistency_error("permutation matrix: column is not a permutation of 0..n-1");
            }
            data_.insert(data_.end(), col.begin(), col.end());
        }
    }

    [[nodiscard]] auto size() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto objectives() const noexcept -> std::size_t { return m_; }

    [[nodiscard]] auto column(std::size_t k) const noexcept -> std::span<std::size_t const>
    {
        return { data_.data() + k * n_, n_ };
    }

    // solution at sorted position q of objective k
    [[nodiscard]] auto operator()(std::size_t q, std::size_t k) const noexcept -> std::size_t
    {
        return data_[k * n_ + q];
    }

private:
    PermutationMatrix() = default;
    friend auto build_permutations(ObjectiveMatrix const&) -> PermutationMatrix;

    std::size_t n_ {};
    std::size_t m_ {};
    std::vector<std::size_t> data_;
};

/// Inverse of PermutationMatrix: r(i, k) is the 0-based position of solution i
/// in column k. Stored row-major so one solution's M ranks are contiguous.
class OrdinalRankMatrix {
public:
    [[nodiscard]] auto size() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto objectives() const noexcept -> std::size_t { return m_; }

    [[nodiscard]] auto operator()(std::size_t i, std::size_t k) const noexcept -> std::size_t
    {
        return data_[i * m_ + k];
    }

    [[nodiscard]] auto row(std::size_t i) const noexcept -> std::span<std::size_t const>
    {
        return { data_.data() + i * m_, m_ };
    }

    [[nodiscard]] auto column(std::size_t k) const -> std::vector<std::size_t>
    {
        std::vector<std::size_t> col(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            col[i] = data_[i * m_ + k];
        }
        return col;
    }

private:
    friend auto build_ordinal_ranks(PermutationMatrix const&) -> OrdinalRankMatrix;

    std::size_t n_ {};
    std::size_t m_ {};
    std::vector<std::size_t> data_;
};

/// Stable lexicographic order of the rows (objectives 0..M-1, then input index).
inline auto lexicographic_order(ObjectiveMatrix const& obj) -> std::vector<std::size_t>
{
    std::vector<std::size_t> order(obj.size());
    std::iota(order.begin(), order.end(), std::size_t { 0 });
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        auto ra = obj.row(a);
        auto rb = obj.row(b);
        return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
    });
    return order;
}

/// Column 0 is the lexicographic order of the rows. Columns 1..M-1 stable-sort
/// column 0 by the single objective k, so equal keys keep their lexicographic
/// relative order. A dominator therefore precedes everything it dominates in
/// every column, which is what makes ordinal-rank comparison a sound
/// dominance test.
inline auto build_permutations(ObjectiveMatrix const& obj) -> PermutationMatrix
{
    auto const n = obj.size();
    auto const m = obj.objectives();

    PermutationMatrix p;
    p.n_ = n;
    p.m_ = m;
    p.data_.resize(n * m);

    auto lex = lexicographic_order(obj);
    std::copy(lex.begin(), lex.end(), p.data_.begin());

    std::vector<std::pair<double, std::size_t>> keyed(n);
    for (std::size_t k = 1; k < m; ++k) {
        for (std::size_t q = 0; q < n; ++q) {
            keyed[q] = { obj(lex[q], k), lex[q] };
        }
        std::stable_sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
        auto* col = p.data_.data() + k * n;
        for (std::size_t q = 0; q < n; ++q) {
            col[q] = keyed[q].second;
        }
    }
    return p;
}

inline auto build_ordinal_ranks(PermutationMatrix const& p) -> OrdinalRankMatrix
{
    OrdinalRankMatrix r;
    r.n_ = p.size();
    r.m_ = p.objectives();
    r.data_.resize(r.n_ * r.m_);
    for (std::size_t k = 0; k < r.m_; ++k) {
        auto col = p.column(k);
        for (std::size_t q = 0; q < r.n_; ++q) {
            r.data_[col[q] * r.m_ + k] = q;
        }
    }
    return r;
}

} // namespace ndsort

#endif
