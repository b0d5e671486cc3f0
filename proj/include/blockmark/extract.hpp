#pragma once

#include <cstdint>
#include <span>

#include "blockmark/image.hpp"
#include "blockmark/keyfile.hpp"

namespace blockmark {

/// Non-blind per-block decoding by sum comparison: 1 when the watermarked
/// block sum strictly exceeds the original block sum, 0 otherwise (ties
/// decode as 0).
int decode_block(std::span<const std::uint8_t> original,
                 std::span<const std::uint8_t> watermarked);

/// Recovers the mark: decodes every block against the original host, undoes
/// the block permutation, then descrambles. Requires the original host; an
/// unmarked image simply decodes to all zeros.
BitMatrix extract(const GrayImage& host, const GrayImage& watermarked, const KeyFile& key);

} // namespace blockmark
