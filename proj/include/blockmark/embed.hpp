#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockmark/blocks.hpp"
#include "blockmark/image.hpp"
#include "blockmark/keyfile.hpp"
#include "blockmark/rng.hpp"

namespace blockmark {

/// Rewrites one block so its intensity sum shifts toward the carried bit.
///
/// Pixels are visited row-major. For bit 1: pixels above the high-class mean
/// snap to the block maximum; pixels in [low mean, block mean) snap to the
/// rounded block mean; every other pixel moves up by a fresh random offset
/// in [1, contrast]. For bit 0 the mirrored rules move intensities down.
/// Flat blocks treat the high-class mean as the block mean, which routes all
/// pixels to the random-offset rule. Results clamp to [0, 255].
///
/// `stats` must come from this exact block; `delta_rng` must be seeded via
/// block_delta_seed for the destination block. Offsets are drawn only for
/// pixels taking the random-offset rule, in visit order.
std::vector<std::uint8_t> embed_bit_in_block(std::span<const std::uint8_t> block, int bit,
                                             const BlockStats& stats, SplitMix64& delta_rng);

/// Full embedding: scrambles the mark, permutes block order, and embeds one
/// scrambled bit per block. Deterministic given (host, mark, key); host and
/// mark dimensions must match the key.
GrayImage embed(const GrayImage& host, const BitMatrix& mark, const KeyFile& key);

} // namespace blockmark
