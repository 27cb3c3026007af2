// SPDX-License-Identifier: MIT
// SPDX-FileCopyrightText: Copyright 2026 ndsort contributors

#ifndef NDSORT_BITSET_HPP
#define NDSORT_BITSET_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"
#include "ranks.hpp"

namespace ndsort {

/// Fixed-capacity bitset over 64-bit blocks.
///
/// Tracks a half-open live range [live_begin, live_end) of blocks that may be
/// nonzero; every block outside it is zero. Logical operations only touch
/// the overlap of the operands' live ranges, so sets that have been whittled
/// down to a narrow band (or to nothing) are cheap to intersect.
class BlockBitset {
public:
    using block_type = std::uint64_t;
    static constexpr std::size_t block_bits = 64;

    static auto empty(std::size_t capacity) -> BlockBitset
    {
        return BlockBitset(capacity);
    }

    static auto full(std::size_t capacity) -> BlockBitset
    {
        BlockBitset bs(capacity);
        std::fill(bs.blocks_.begin(), bs.blocks_.end(), ~block_type { 0 });
        if (auto tail = capacity % block_bits; tail != 0) {
            bs.blocks_.back() = (block_type { 1 } << tail) - 1;
        }
        bs.lo_ = 0;
        bs.hi_ = bs.blocks_.size();
        return bs;
    }

    [[nodiscard]] auto capacity() const noexcept -> std::size_t { return capacity_; }
    [[nodiscard]] auto block_count() const noexcept -> std::size_t { return blocks_.size(); }
    [[nodiscard]] auto blocks() const noexcept -> std::span<block_type const> { return blocks_; }
    [[nodiscard]] auto live_begin() const noexcept -> std::size_t { return lo_; }
    [[nodiscard]] auto live_end() const noexcept -> std::size_t { return hi_; }

    [[nodiscard]] auto contains(std::size_t i) const -> bool
    {
        check_index(i);
        return (blocks_[i / block_bits] >> (i % block_bits)) & 1U;
    }

    auto insert(std::size_t i) -> void
    {
        check_index(i);
        auto const w = i / block_bits;
        blocks_[w] |= block_type { 1 } << (i % block_bits);
        if (lo_ == hi_) {
            lo_ = w;
            hi_ = w + 1;
        } else {
            lo_ = std::min(lo_, w);
            hi_ = std::max(hi_, w + 1);
        }
    }

    // Clearing the last bit of a boundary block shrinks the live range.
    auto remove(std::size_t i) -> void
    {
        check_index(i);
        auto const w = i / block_bits;
        blocks_[w] &= ~(block_type { 1 } << (i % block_bits));
        if (blocks_[w] == 0 && (w == lo_ || w + 1 == hi_)) {
            tighten(lo_, hi_);
        }
    }

    /// this &= other. Returns the number of blocks ANDed, which is the size of
    /// the overlap of both live ranges (zero when they are disjoint).
    auto intersect_assign(BlockBitset const& other) -> std::size_t
    {
        check_capacity(other);
        auto const lo = std::max(lo_, other.lo_);
        auto const hi = std::min(hi_, other.hi_);
        if (lo >= hi) {
            clear_range(lo_, hi_);
            lo_ = hi_ = 0;
            return 0;
        }
        clear_range(lo_, lo);
        clear_range(hi, hi_);
        auto* dst = blocks_.data();
        auto const* src = other.blocks_.data();
        for (std::size_t w = lo; w < hi; ++w) {
            dst[w] &= src[w];
        }
        tighten(lo, hi);
        return hi - lo;
    }

    /// this &= ~other. Returns the number of blocks visited.
    auto difference_assign(BlockBitset const& other) -> std::size_t
    {
        check_capacity(other);
        auto const lo = std::max(lo_, other.lo_);
        auto const hi = std::min(hi_, other.hi_);
        if (lo >= hi) {
            return 0;
        }
        for (std::size_t w = lo; w < hi; ++w) {
            blocks_[w] &= ~other.blocks_[w];
        }
        tighten(lo_, hi_);
        return hi - lo;
    }

    [[nodiscard]] auto popcount() const noexcept -> std::size_t
    {
        std::size_t c = 0;
        for (auto w = lo_; w < hi_; ++w) {
            c += static_cast<std::size_t>(std::popcount(blocks_[w]));
        }
        return c;
    }

    [[nodiscard]] auto is_empty() const noexcept -> bool
    {
        return std::all_of(blocks_.begin() + static_cast<std::ptrdiff_t>(lo_),
            blocks_.begin() + static_cast<std::ptrdiff_t>(hi_), [](auto b) { return b == 0; });
    }

    /// Forward iterator over set bit positions, ascending.
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = std::size_t;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = std::size_t;

        const_iterator() = default;

        auto operator*() const noexcept -> std::size_t
        {
            return word_ * block_bits + static_cast<std::size_t>(std::countr_zero(current_));
        }

        auto operator++() noexcept -> const_iterator&
        {
            current_ &= current_ - 1;
            advance();
            return *this;
        }

        auto operator++(int) noexcept -> const_iterator
        {
            auto tmp = *this;
            ++*this;
            return tmp;
        }

        auto operator==(const_iterator const& other) const noexcept -> bool
        {
            return word_ == other.word_ && current_ == other.current_;
        }

    private:
        friend class BlockBitset;

        const_iterator(block_type const* blocks, std::size_t word, std::size_t end)
            : blocks_(blocks)
            , word_(word)
            , end_(end)
            , current_(word < end ? blocks[word] : 0)
        {
            advance();
        }

        auto advance() noexcept -> void
        {
            while (current_ == 0 && word_ < end_) {
                if (++word_ < end_) {
                    current_ = blocks_[word_];
                }
            }
        }

        block_type const* blocks_ {};
        std::size_t word_ {};
        std::size_t end_ {};
        block_type current_ {};
    };

    [[nodiscard]] auto begin() const noexcept -> const_iterator { return { blocks_.data(), lo_, hi_ }; }
    [[nodiscard]] auto end() const noexcept -> const_iterator { return { blocks_.data(), hi_, hi_ }; }

    [[nodiscard]] auto ones() const -> std::vector<std::size_t> { return { begin(), end() }; }

    // set equality; live ranges may differ
    auto operator==(BlockBitset const& other) const noexcept -> bool
    {
        return capacity_ == other.capacity_ && blocks_ == other.blocks_;
    }

private:
    explicit BlockBitset(std::size_t capacity)
        : capacity_(capacity)
    {
        if (capacity == 0) {
            throw input_error("bitset capacity must be positive");
        }
        blocks_.assign((capacity + block_bits - 1) / block_bits, 0);
    }

    auto check_index(std::size_t i) const -> void
    {
        if (i >= capacity_) {
            throw index_error("bitset index " + std::to_string(i) + " out of range for capacity "
                + std::to_string(capacity_));
        }
    }

    auto check_capacity(BlockBitset const& other) const -> void
    {
        if (other.capacity_ != capacity_) {
            throw dimension_error("bitset capacities differ: " + std::to_string(capacity_) + " vs "
                + std::to_string(other.capacity_));
        }
    }

    auto clear_range(std::size_t lo, std::size_t hi) noexcept -> void
    {
        if (lo < hi) {
            std::fill(blocks_.begin() + static_cast<std::ptrdiff_t>(lo), blocks_.begin() + static_cast<std::ptrdiff_t>(hi), 0);
        }
    }

    // Sets the live range to the nonzero blocks within [lo, hi); callers
    // guarantee blocks outside [lo, hi) are zero.
    auto tighten(std::size_t lo, std::size_t hi) noexcept -> void
    {
        while (lo < hi && blocks_[lo] == 0) {
            ++lo;
        }
        while (hi > lo && blocks_[hi - 1] == 0) {
            --hi;
        }
        if (lo == hi) {
            lo = hi = 0;
        }
        lo_ = lo;
        hi_ = hi;
    }

    std::size_t capacity_ {};
    std::vector<block_type> blocks_;
    std::size_t lo_ {};
    std::size_t hi_ {};
};

inline auto intersect_assign(BlockBitset& dst, BlockBitset const& src, Counters& counters) -> void
{
    counters.block_ops += dst.intersect_assign(src);
}

inline auto difference_assign(BlockBitset& dst, BlockBitset const& src, Counters& counters) -> void
{
    counters.block_ops += dst.difference_assign(src);
}

} // namespace ndsort

#endif
