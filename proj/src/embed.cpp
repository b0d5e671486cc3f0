#include "blockmark/embed.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "blockmark/permute.hpp"

namespace blockmark {

namespace {

std::uint8_t clamp_intensity(std::int64_t v) {
    return static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
}

} // namespace

std::vector<std::uint8_t> embed_bit_in_block(std::span<const std::uint8_t> block, int bit,
                                             const BlockStats& stats, SplitMix64& delta_rng) {
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
    // Flat block: the high class is empty and its mean stands in for the
    // block mean, so no pixel can satisfy the snap rules.
    const Rational high_mean = stats.high_count() == 0 ? stats.mean : stats.high_mean;
    const int rounded_mean = round_half_up(stats.mean);

    std::vector<std::uint8_t> out(block.size());
    for (std::size_t i = 0; i < block.size(); ++i) {
        const int g = block[i];
        int g_new;
        if (bit == 1) {
            if (compare(g, high_mean) > 0) {
                g_new = stats.max_value;
            } else if (compare(g, stats.low_mean) >= 0 && compare(g, stats.mean) < 0) {
                g_new = rounded_mean;
            } else {
                const auto delta = static_cast<std::int64_t>(1 + delta_rng.below(stats.contrast));
                g_new = clamp_intensity(g + delta);
            }
        } else {
            if (compare(g, stats.low_mean) < 0) {
                g_new = stats.min_value;
            } else if (compare(g, stats.mean) >= 0 && compare(g, high_mean) < 0) {
                g_new = rounded_mean;
            } else {
                const auto delta = static_cast<std::int64_t>(1 + delta_rng.below(stats.contrast));
                g_new = clamp_intensity(g - delta);
            }
        }
        out[i] = static_cast<std::uint8_t>(g_new);
    }
    return out;
}

GrayImage embed(const GrayImage& host, const BitMatrix& mark, const KeyFile& key) {
    key.validate();
    if (host.width != key.host_width || host.height != key.host_height) {
        throw std::invalid_argument("host is " + std::to_string(host.width) + "x" +
                                    std::to_string(host.height) + " but key declares " +
                                    std::to_string(key.host_width) + "x" +
                                    std::to_string(key.host_height));
    }
    if (mark.width != key.mark_width || mark.height != key.mark_height) {
        throw std::invalid_argument("mark is " + std::to_string(mark.width) + "x" +
                                    std::to_string(mark.height) + " but key declares " +
                                    std::to_string(key.mark_width) + "x" +
                                    std::to_string(key.mark_height));
    }

    const BlockGrid grid(host.width, host.height, key.block_size);
    const auto scrambled = scramble_bits(mark.bits, key.scramble_seed);
    const auto perm = fisher_yates(grid.block_count(), key.perm_seed);
    const Rational alpha = key.alpha();

    GrayImage out = host;
    for (std::size_t i = 0; i < scrambled.size(); ++i) {
        const std::size_t k = perm[i];
        const auto block = block_view(host, grid, k);
        const BlockStats stats = block_stats(block, alpha, key.c_min);
        SplitMix64 delta_rng(block_delta_seed(key.delta_seed, k));
        const auto modified = embed_bit_in_block(block, scrambled[i], stats, delta_rng);
        block_write(out, grid, k, modified);
    }
    return out;
}

} // namespace blockmark
