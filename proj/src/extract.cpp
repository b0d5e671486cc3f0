#include "blockmark/extract.hpp"

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockmark/blocks.hpp"
#include "blockmark/permute.hpp"

namespace blockmark {

int decode_block(std::span<const std::uint8_t> original,
                 std::span<const std::uint8_t> watermarked) {
    if (original.size() != watermarked.size()) {
        throw std::invalid_argument("block shape mismatch");
    }
    const auto sum_orig = std::accumulate(original.begin(), original.end(), std::int64_t{0});
    const auto sum_wm = std::accumulate(watermarked.begin(), watermarked.end(), std::int64_t{0});
    return sum_wm > sum_orig ? 1 : 0;
}

BitMatrix extract(const GrayImage& host, const GrayImage& watermarked, const KeyFile& key) {
    key.validate();
    if (host.width != key.host_width || host.height != key.host_height ||
        !watermarked.same_size(host)) {
        throw std::invalid_argument("image dimensions do not match key host " +
                                    std::to_string(key.host_width) + "x" +
                                    std::to_string(key.host_height));
    }

    const BlockGrid grid(host.width, host.height, key.block_size);
    const std::size_t n = grid.block_count();

    std::vector<std::uint8_t> raw(n);
    for (std::size_t k = 0; k < n; ++k) {
        raw[k] = static_cast<std::uint8_t>(
            decode_block(block_view(host, grid, k), block_view(watermarked, grid, k)));
    }

    // Bit i was placed in block perm[i]; read it back from there.
    const auto perm = fisher_yates(n, key.perm_seed);
    std::vector<std::uint8_t> scrambled(n);
    for (std::size_t i = 0; i < n; ++i) {
        scrambled[i] = raw[perm[i]];
    }

    auto bits = descramble_bits(scrambled, key.scramble_seed);
    return BitMatrix(key.mark_width, key.mark_height, std::move(bits));
}

} // namespace blockmark
