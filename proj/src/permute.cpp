#include "blockmark/permute.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "blockmark/rng.hpp"

namespace blockmark {

Permutation fisher_yates(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("permutation length must be positive");
    }
    if (n > (1ULL << 32)) {
        throw std::invalid_argument("permutation length exceeds 2^32");
    }
    std::vector<std::uint32_t> shuffled(n);
    std::iota(shuffled.begin(), shuffled.end(), 0u);
    SplitMix64 rng(seed);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const auto j = static_cast<std::size_t>(rng.below(i + 1));
        std::swap(shuffled[i], shuffled[j]);
    }
    // shuffled[pos] holds element; report each element's final position.
    Permutation mapping(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        mapping[shuffled[pos]] = static_cast<std::uint32_t>(pos);
    }
    return mapping;
}

Permutation invert_permutation(const Permutation& p) {
    Permutation q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[p[i]] = static_cast<std::uint32_t>(i);
    }
    return q;
}

std::vector<std::uint8_t> scramble_bits(std::span<const std::uint8_t> bits,
                                        std::uint64_t seed) {
    if (bits.empty()) {
        throw std::invalid_argument("cannot scramble an empty bit sequence");
    }
    const Permutation perm = fisher_yates(bits.size(), seed);
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[perm[i]] = bits[i];
    }
    return out;
}

std::vector<std::uint8_t> descramble_bits(std::span<const std::uint8_t> bits,
                                          std::uint64_t seed) {
    if (bits.empty()) {
        throw std::invalid_argument("cannot descramble an empty bit sequence");
    }
    const Permutation perm = fisher_yates(bits.size(), seed);
    std::vector<std::uint8_t> out(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        out[i] = bits[perm[i]];
    }
    return out;
}

} // namespace blockmark
