#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "blockmark/image.hpp"

namespace blockmark {

/// Exact fraction with positive denominator. Never reduced; comparisons go
/// through cross-multiplication so block classification stays bit-exact.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    bool operator==(const Rational&) const = default;
};

/// Three-way comparison of an integer against a rational (den > 0).
inline int compare(std::int64_t value, const Rational& r) {
    const std::int64_t lhs = value * r.den;
    if (lhs < r.num) return -1;
    if (lhs > r.num) return 1;
    return 0;
}

/// Nearest integer with halves rounding up. Requires num >= 0, den > 0.
inline int round_half_up(const Rational& r) {
    return static_cast<int>((2 * r.num + r.den) / (2 * r.den));
}

/// Tiling of an image into square blocks, enumerated row-major.
struct BlockGrid {
    int block_size = 0;
    int blocks_x = 0;
    int blocks_y = 0;

    /// Throws std::invalid_argument unless both image dimensions are exact
    /// multiples of block_size.
    BlockGrid(int image_width, int image_height, int block_size);

    std::size_t block_count() const {
        return static_cast<std::size_t>(blocks_x) * blocks_y;
    }
};

/// Pixels of block k, row-major within the block. Throws std::out_of_range
/// for an invalid index.
std::vector<std::uint8_t> block_view(const GrayImage& image, const BlockGrid& grid,
                                     std::size_t k);

/// Writes block k back into the image at its original position.
void block_write(GrayImage& image, const BlockGrid& grid, std::size_t k,
                 std::span<const std::uint8_t> block);

/// Per-block statistics in exact arithmetic. Pixels strictly above the block
/// mean form the high class; the rest form the low class. The low class is
/// never empty; the high class is empty exactly when the block is flat.
struct BlockStats {
    std::int64_t sum = 0;
    int min_value = 0;
    int max_value = 0;
    Rational mean;      // (sum, pixel count)
    Rational low_mean;  // (low-class sum, low-class count), count >= 1
    Rational high_mean; // (high-class sum, high-class count), count may be 0
    int contrast = 1;   // modification budget, always >= 1

    std::int64_t high_count() const { return high_mean.den; }
    std::int64_t low_count() const { return low_mean.den; }
};

/// Computes BlockStats for a nonempty block. The contrast budget is
/// max(c_min, floor(alpha * (max - min))) with alpha a nonnegative rational
/// and c_min in [1, 255].
BlockStats block_stats(std::span<const std::uint8_t> block, const Rational& alpha,
                       int c_min);

} // namespace blockmark
