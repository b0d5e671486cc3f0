#pragma once

#include <cstdint>
#include <stdexcept>

namespace blockmark {

/// SplitMix64 generator. A value type: copying forks an independent stream,
/// identical seeds give bit-identical streams on every platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

    constexpr std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n) via one generator step. Modulo bias is
    /// accepted; n is capped at 2^32 to keep it negligible.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0 || n > (1ULL << 32)) {
            throw std::invalid_argument("uniform bound must be in [1, 2^32]");
        }
        return next() % n;
    }

    constexpr std::uint64_t state() const { return state_; }

private:
    std::uint64_t state_;
};

/// Seed for the per-block delta stream. Keyed by destination block index so
/// block processing order never affects the output.
constexpr std::uint64_t block_delta_seed(std::uint64_t delta_seed, std::uint64_t block_index) {
    return delta_seed ^ ((block_index + 1) * 0x9E3779B97F4A7C15ULL);
}

} // namespace blockmark
