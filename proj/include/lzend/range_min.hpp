#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <vector>

namespace lzend {

// Range minimum queries over an owned array.
//
// The array is cut into blocks of Θ(lg n) entries. Block minima are indexed by a
// sparse table, and the partial blocks at either end of a query are scanned.
class RangeMin {
private:
    std::vector<std::size_t> values_;
    std::size_t block_ = 1;
    unsigned block_shift_ = 0;

    // sparse_[k][b]: position of the minimum over blocks [b, b + 2^k)
    std::vector<std::vector<std::size_t>> sparse_;

    std::size_t scan(std::size_t x, std::size_t y) const {
        std::size_t best = x;
        for(std::size_t i = x + 1; i <= y; ++i) {
            if(values_[i] < values_[best]) best = i;
        }
        return best;
    }

    std::size_t pick(std::size_t a, std::size_t b) const {
        return values_[b] < values_[a] ? b : a;
    }

public:
    RangeMin() = default;

    explicit RangeMin(std::vector<std::size_t> values) : values_(std::move(values)) {
        std::size_t const n = values_.size();
        if(n == 0) return;

        block_ = std::bit_ceil(std::max<std::size_t>(8, std::bit_width(n)));
        block_shift_ = static_cast<unsigned>(std::countr_zero(block_));

        std::size_t const num_blocks = (n + block_ - 1) / block_;
        sparse_.emplace_back(num_blocks);
        for(std::size_t b = 0; b < num_blocks; ++b) {
            sparse_[0][b] = scan(b * block_, std::min(n, (b + 1) * block_) - 1);
        }
        for(std::size_t k = 1; (std::size_t{1} << k) <= num_blocks; ++k) {
            auto const& prev = sparse_[k - 1];
            std::size_t const half = std::size_t{1} << (k - 1);
            std::vector<std::size_t> level(num_blocks - (std::size_t{1} << k) + 1);
            for(std::size_t b = 0; b < level.size(); ++b) {
                level[b] = pick(prev[b], prev[b + half]);
            }
            sparse_.push_back(std::move(level));
        }
    }

    std::size_t size() const { return values_.size(); }
    std::vector<std::size_t> const& values() const { return values_; }
    std::size_t operator[](std::size_t i) const { return values_[i]; }

    // position of a minimum in values[x..y] (leftmost among the scanned candidates)
    std::size_t argmin(std::size_t x, std::size_t y) const {
        assert(x <= y && y < values_.size());
        std::size_t const bx = x >> block_shift_;
        std::size_t const by = y >> block_shift_;
        if(by - bx <= 1) return scan(x, y);

        std::size_t best = scan(x, ((bx + 1) << block_shift_) - 1);
        std::size_t const lo = bx + 1, hi = by - 1;
        unsigned const k = static_cast<unsigned>(std::bit_width(hi - lo + 1) - 1);
        best = pick(best, sparse_[k][lo]);
        best = pick(best, sparse_[k][hi + 1 - (std::size_t{1} << k)]);
        return pick(best, scan(by << block_shift_, y));
    }

    std::size_t min(std::size_t x, std::size_t y) const { return values_[argmin(x, y)]; }
};

} // namespace lzend
