// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_DOMINANCE_HPP
#define NDSORT_DOMINANCE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace ndsort {

enum class Dominance {
    first_dominates,
    second_dominates,
    incomparable,
    equal,
};

constexpr auto to_string(Dominance d) noexcept -> std::string_view
{
    switch (d) {
    case Dominance::first_dominates:
        return "first_dominates";
    case Dominance::second_dominates:
        return "second_dominates";
    case Dominance::incomparable:
        return "incomparable";
    case Dominance::equal:
        return "equal";
    }
    return "?";
}

/// Pareto comparison under minimization. `a` dominates `b` when it is no
/// worse in every objective and the two vectors differ.
inline auto compare_dominance(std::span<double const> a, std::span<double const> b) -> Dominance
{
    if (a.size() != b.size()) {
        throw dimension_error("compare_dominance: vectors of length " + std::to_string(a.size())
            + " and " + std::to_string(b.size()));
    }
    bool a_better = false;
    bool b_better = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < b[k]) {
            a_better = true;
        } else if (b[k] < a[k]) {
            b_better = true;
        }
        if (a_better && b_better) {
            return Dominance::incomparable;
        }
    }
    if (a_better) {
        return Dominance::first_dominates;
    }
    return b_better ? Dominance::second_dominates : Dominance::equal;
}

inline auto dominates(std::span<double const> a, std::span<double const> b) -> bool
{
    return compare_dominance(a, b) == Dominance::first_dominates;
}

} // namespace ndsort

#endif
