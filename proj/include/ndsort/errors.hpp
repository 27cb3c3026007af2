// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_ERRORS_HPP
#define NDSORT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ndsort {

// Shapes of two operands do not agree (vector lengths, bitset capacities, matrix sizes).
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input values (non-finite objectives, empty matrices, bad generator settings).
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Input is well formed but violates an algorithm contract, e.g. duplicate rows.
struct precondition_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Derived data is inconsistent with itself (rank gaps, non-permutations, size mismatch).
struct consistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

// The requested instance would exceed the configured memory budget.
struct capacity_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct index_error : std::out_of_range {
    using std::out_of_range::out_of_range;
};

class parse_error : public input_error {
public:
    parse_error(std::size_t line, std::string const& what)
        : input_error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {
    }

    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

} // namespace ndsort

#endif
