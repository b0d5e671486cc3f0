#include "blockmark/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace blockmark {

BlockGrid::BlockGrid(int image_width, int image_height, int block_size_)
    : block_size(block_size_) {
    if (block_size <= 0) {
        throw std::invalid_argument("block size must be positive");
    }
    if (image_width % block_size != 0 || image_height % block_size != 0) {
        throw std::invalid_argument("image " + std::to_string(image_width) + "x" +
                                    std::to_string(image_height) +
                                    " not divisible by block size " +
                                    std::to_string(block_size));
    }
    blocks_x = image_width / block_size;
    blocks_y = image_height / block_size;
}

namespace {

struct BlockOrigin {
    int x0;
    int y0;
};

BlockOrigin block_origin(const BlockGrid& grid, std::size_t k) {
    if (k >= grid.block_count()) {
        throw std::out_of_range("block index " + std::to_string(k) + " >= " +
                                std::to_string(grid.block_count()));
    }
    const int bx = static_cast<int>(k % grid.blocks_x);
    const int by = static_cast<int>(k / grid.blocks_x);
    return {bx * grid.block_size, by * grid.block_size};
}

} // namespace

std::vector<std::uint8_t> block_view(const GrayImage& image, const BlockGrid& grid,
                                     std::size_t k) {
    const auto [x0, y0] = block_origin(grid, k);
    const int n = grid.block_size;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            out[static_cast<std::size_t>(y) * n + x] = image.at(x0 + x, y0 + y);
        }
    }
    return out;
}

void block_write(GrayImage& image, const BlockGrid& grid, std::size_t k,
                 std::span<const std::uint8_t> block) {
    const auto [x0, y0] = block_origin(grid, k);
    const int n = grid.block_size;
    if (block.size() != static_cast<std::size_t>(n) * n) {
        throw std::invalid_argument("block payload size mismatch");
    }
    for (int y = 0; y < n; ++y) {
        for (int x = 0; x < n; ++x) {
            image.at(x0 + x, y0 + y) = block[static_cast<std::size_t>(y) * n + x];
        }
    }
}

BlockStats block_stats(std::span<const std::uint8_t> block, const Rational& alpha,
                       int c_min) {
    if (block.empty()) {
        throw std::invalid_argument("block must be nonempty");
    }
    if (alpha.num < 0 || alpha.den < 1) {
        throw std::invalid_argument("alpha must be a nonnegative rational");
    }
    if (c_min < 1 || c_min > 255) {
        throw std::invalid_argument("c_min must be in [1, 255]");
    }

    BlockStats s;
    s.min_value = block[0];
    s.max_value = block[0];
    for (std::uint8_t g : block) {
        s.sum += g;
        s.min_value = std::min<int>(s.min_value, g);
        s.max_value = std::max<int>(s.max_value, g);
    }
    const auto count = static_cast<std::int64_t>(block.size());
    s.mean = {s.sum, count};

    // g is high-class iff g > mean, i.e. g * count > sum.
    std::int64_t high_sum = 0;
    std::int64_t high_count = 0;
    for (std::uint8_t g : block) {
        if (compare(g, s.mean) > 0) {
            high_sum += g;
            ++high_count;
        }
    }
    s.high_mean = {high_sum, high_count};
    s.low_mean = {s.sum - high_sum, count - high_count};

    const std::int64_t scaled = alpha.num * (s.max_value - s.min_value) / alpha.den;
    s.contrast = static_cast<int>(std::max<std::int64_t>(c_min, scaled));
    return s;
}

} // namespace blockmark
