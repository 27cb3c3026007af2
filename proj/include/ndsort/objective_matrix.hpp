// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_OBJECTIVE_MATRIX_HPP
#define NDSORT_OBJECTIVE_MATRIX_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace ndsort {

/// N solutions by M objective values, row-major, minimization.
///
/// Every entry is finite. Negative zero is stored as positive zero so that
/// bitwise row equality coincides with numeric row equality.
class ObjectiveMatrix {
public:
    ObjectiveMatrix(std::size_t n, std::size_t m, std::vector<double> values)
        : n_(n)
        , m_(m)
        , values_(std::move(values))
    {
        if (n_ == 0 || m_ == 0) {
            throw input_error("objective matrix needs at least one solution and one objective");
        }
        if (values_.size() != n_ * m_) {
            throw dimension_error("objective matrix: expected " + std::to_string(n_ * m_)
                + " values, got " + std::to_string(values_.size()));
        }
        for (std::size_t i = 0; i < values_.size(); ++i) {
            if (!std::isfinite(values_[i])) {
                throw input_error("objective matrix: non-finite value at solution "
                    + std::to_string(i / m_) + ", objective " + std::to_string(i % m_));
            }
            values_[i] += 0.0; // -0.0 -> +0.0
        }
    }

    ObjectiveMatrix(std::initializer_list<std::initializer_list<double>> rows)
        : ObjectiveMatrix(from_rows(rows))
    {
    }

    template <typename Rows>
    static auto from_rows(Rows const& rows) -> ObjectiveMatrix
    {
        std::size_t n = std::size(rows);
        std::size_t m = n == 0 ? 0 : std::size(*std::begin(rows));
        std::vector<double> values;
        values.reserve(n * m);
        for (auto const& row : rows) {
            if (std::size(row) != m) {
                throw dimension_error("objective matrix: ragged rows");
            }
            values.insert(values.end(), std::begin(row), std::end(row));
        }
        return { n, m, std::move(values) };
    }

    [[nodiscard]] auto size() const noexcept -> std::size_t { return n_; }
    [[nodiscard]] auto objectives() const noexcept -> std::size_t { return m_; }

    [[nodiscard]] auto operator()(std::size_t i, std::size_t k) const noexcept -> double
    {
        return values_[i * m_ + k];
    }

    [[nodiscard]] auto row(std::size_t i) const noexcept -> std::span<double const>
    {
        return { values_.data() + i * m_, m_ };
    }

    [[nodiscard]] auto values() const noexcept -> std::span<double const> { return values_; }

    auto operator==(ObjectiveMatrix const&) const -> bool = default;

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<double> values_;
};

namespace detail {
    inline auto is_separator(char c) noexcept -> bool
    {
        return c == ' ' || c == '\t' || c == ',' || c == '\r';
    }
} // namespace detail

/// Reads the plain-text matrix format: one solution per line, values separated
/// by whitespace and/or commas. Blank lines are ignored.
inline auto parse_matrix(std::istream& in) -> ObjectiveMatrix
{
    std::vector<double> values;
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t lineno = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t count = 0;
        char const* p = line.data();
        char const* end = p + line.size();
        while (p != end) {
            if (detail::is_separator(*p)) {
                ++p;
                continue;
            }
            double v {};
            auto [next, ec] = std::from_chars(p, end, v);
            if (ec != std::errc {} || (next != end && !detail::is_separator(*next))) {
                char const* tok_end = p;
                while (tok_end != end && !detail::is_separator(*tok_end)) {
                    ++tok_end;
                }
                throw parse_error(lineno, "invalid number '" + std::string(p, tok_end) + "'");
            }
            if (!std::isfinite(v)) {
                throw parse_error(lineno, "non-finite value");
            }
            values.push_back(v);
            ++count;
            p = next;
        }
        if (count == 0) {
            continue;
        }
        if (m == 0) {
            m = count;
        } else if (count != m) {
            throw parse_error(lineno, "expected " + std::to_string(m) + " values, got " + std::to_string(count));
        }
        ++n;
    }
    if (n == 0) {
        throw input_error("matrix input contains no solutions");
    }
    return { n, m, std::move(values) };
}

inline auto read_matrix(std::string const& path) -> ObjectiveMatrix
{
    std::ifstream in(path);
    if (!in) {
        throw input_error("cannot open '" + path + "'");
    }
    return parse_matrix(in);
}

inline auto write_matrix(std::ostream& out, ObjectiveMatrix const& obj) -> void
{
    auto const precision = out.precision(17);
    for (std::size_t i = 0; i < obj.size(); ++i) {
        auto row = obj.row(i);
        for (std::size_t k = 0; k < row.size(); ++k) {
            out << (k == 0 ? "" : " ") << row[k];
        }
        out << '\n';
    }
    out.precision(precision);
}

} // namespace ndsort

#endif
