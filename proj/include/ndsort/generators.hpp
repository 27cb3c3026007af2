// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_GENERATORS_HPP
#define NDSORT_GENERATORS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "core.hpp"

namespace ndsort {

enum class GeneratorKind {
    uniform,
    single_front,
    chain,
    duplicates,
    file,
};

constexpr auto to_string(GeneratorKind kind) noexcept -> std::string_view
{
    switch (kind) {
    case GeneratorKind::uniform:
        return "uniform";
    case GeneratorKind::single_front:
        return "single-front";
    case GeneratorKind::chain:
        return "chain";
    case GeneratorKind::duplicates:
        return "duplicates";
    case GeneratorKind::file:
        return "file";
    }
    return "?";
}

inline auto parse_generator_kind(std::string_view name) -> std::optional<GeneratorKind>
{
    for (auto kind : { GeneratorKind::uniform, GeneratorKind::single_front, GeneratorKind::chain,
             GeneratorKind::duplicates, GeneratorKind::file }) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    if (name == "single_front") {
        return GeneratorKind::single_front;
    }
    return std::nullopt;
}

struct GeneratorSpec {
    GeneratorKind kind { GeneratorKind::uniform };
    std::size_t n { 1 };
    std::size_t m { 2 };
    std::uint64_t seed { 0 };
    double dup_fraction { 0.3 };
    std::string path;

    auto validate() const -> void
    {
        if (kind == GeneratorKind::file) {
            if (path.empty()) {
                throw input_error("file generator needs a path");
            }
            return;
        }
        if (n == 0 || m == 0) {
            throw input_error("generator needs n >= 1 and m >= 1");
        }
        if (kind == GeneratorKind::single_front && m < 2) {
            throw input_error("single-front generator needs m >= 2");
        }
        if (kind == GeneratorKind::duplicates && !(dup_fraction >= 0.0 && dup_fraction < 1.0)) {
            throw input_error("dup_fraction must lie in [0, 1)");
        }
    }
};

// mt19937_64 output mapped to [0, 1) with 53 bits of precision.
inline auto unit_double(std::mt19937_64& rng) -> double
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace detail {
    inline auto uniform_values(std::size_t n, std::size_t m, std::mt19937_64& rng) -> std::vector<double>
    {
        std::vector<double> values(n * m);
        for (auto& v : values) {
            v = unit_double(rng);
        }
        return values;
    }

    // index drawn uniformly from [0, bound)
    inline auto draw_index(std::mt19937_64& rng, std::size_t bound) -> std::size_t
    {
        return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
    }
} // namespace detail

/// Builds a test instance.
///
/// - uniform: i.i.d. points in the unit hypercube.
/// - single-front: point i (1-based) is (i/n, (n+1-i)/n, 0.5, ...); one front.
/// - chain: point i is (i/n, ..., i/n); n singleton fronts.
/// - duplicates: uniform, then floor(dup_fraction * n) rows overwritten with
///   copies of earlier rows.
/// - file: the plain-text matrix format.
///
/// Randomness comes from std::mt19937_64 seeded with `seed`, so a given spec
/// produces the same matrix on every run.
inline auto generate(GeneratorSpec const& spec) -> ObjectiveMatrix
{
    spec.validate();
    auto const n = spec.n;
    auto const m = spec.m;
    std::mt19937_64 rng(spec.seed);

    switch (spec.kind) {
    case GeneratorKind::uniform:
        return { n, m, detail::uniform_values(n, m, rng) };

    case GeneratorKind::single_front: {
        std::vector<double> values(n * m, 0.5);
        for (std::size_t i = 1; i <= n; ++i) {
            values[(i - 1) * m] = static_cast<double>(i) / static_cast<double>(n);
            values[(i - 1) * m + 1] = static_cast<double>(n + 1 - i) / static_cast<double>(n);
        }
        return { n, m, std::move(values) };
    }

    case GeneratorKind::chain: {
        std::vector<double> values(n * m);
        for (std::size_t i = 1; i <= n; ++i) {
            std::fill_n(values.begin() + static_cast<std::ptrdiff_t>((i - 1) * m), m,
                static_cast<double>(i) / static_cast<double>(n));
        }
        return { n, m, std::move(values) };
    }

    case GeneratorKind::duplicates: {
        auto values = detail::uniform_values(n, m, rng);
        auto const copies = static_cast<std::size_t>(spec.dup_fraction * static_cast<double>(n));
        std::vector<std::size_t> targets(n - 1);
        std::iota(targets.begin(), targets.end(), std::size_t { 1 });
        std::shuffle(targets.begin(), targets.end(), rng);
        targets.resize(std::min(copies, targets.size()));
        std::sort(targets.begin(), targets.end());
        for (auto t : targets) {
            auto const source = detail::draw_index(rng, t);
            std::copy_n(values.begin() + static_cast<std::ptrdiff_t>(source * m), m,
                values.begin() + static_cast<std::ptrdiff_t>(t * m));
        }
        return { n, m, std::move(values) };
    }

    case GeneratorKind::file:
        return read_matrix(spec.path);
    }
    throw input_error("unknown generator kind");
}

} // namespace ndsort

#endif
