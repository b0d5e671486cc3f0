#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace blockmark {

/// A bijection on {0..n-1}: perm[i] is the destination index of element i.
using Permutation = std::vector<std::uint32_t>;

/// Seeded Fisher-Yates shuffle. Deterministic: the seed fully determines the
/// result. Throws std::invalid_argument for n == 0 or n > 2^32.
Permutation fisher_yates(std::size_t n, std::uint64_t seed);

/// Inverse bijection q with q[p[i]] == i.
Permutation invert_permutation(const Permutation& p);

/// Keyed positional scrambling: output[perm[i]] = bits[i] where perm is the
/// Fisher-Yates permutation for this seed.
std::vector<std::uint8_t> scramble_bits(std::span<const std::uint8_t> bits,
                                        std::uint64_t seed);

/// Exact inverse of scramble_bits for the same seed.
std::vector<std::uint8_t> descramble_bits(std::span<const std::uint8_t> bits,
                                          std::uint64_t seed);

} // namespace blockmark
