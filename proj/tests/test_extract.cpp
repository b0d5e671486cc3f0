#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "blockmark/embed.hpp"
#include "blockmark/extract.hpp"
#include "blockmark/metrics.hpp"
#include "blockmark/permute.hpp"

#include "support/fixtures.hpp"

using namespace blockmark;

TEST_CASE("decode_block compares block sums, ties decode to 0") {
    const std::vector<std::uint8_t> block(16, 100);
    CHECK(decode_block(block, block) == 0);

    auto brighter = block;
    brighter[5] += 1;
    CHECK(decode_block(block, brighter) == 1);

    auto darker = block; // sum 1600 -> 1599
    darker[5] -= 1;
    CHECK(decode_block(block, darker) == 0);

    const std::vector<std::uint8_t> small(4, 0);
    CHECK_THROWS_AS(decode_block(block, small), std::invalid_argument);
}

TEST_CASE("decode_block depends only on the block sum") {
    std::vector<std::uint8_t> orig{10, 20, 30, 40, 50, 60, 70, 80,
                                   90, 11, 12, 13, 14, 15, 16, 17};
    std::vector<std::uint8_t> wm = orig;
    wm[0] += 3;
    const int bit = decode_block(orig, wm);
    SplitMix64 rng(2024);
    for (int iter = 0; iter < 20; ++iter) {
        for (std::size_t i = wm.size(); i > 1; --i) {
            std::swap(wm[i - 1], wm[rng.below(i)]);
        }
        REQUIRE(decode_block(orig, wm) == bit);
    }
}

TEST_CASE("extract inverts embed exactly on unsaturated hosts") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const auto setup = fixtures::random_setup(48, 48, seed, 1, 254);
        const auto wm = embed(setup.host, setup.mark, setup.key);
        const auto recovered = extract(setup.host, wm, setup.key);
        REQUIRE(recovered == setup.mark);
    }
}

TEST_CASE("extracting from the untouched host yields all zeros") {
    const auto setup = fixtures::random_setup(32, 32, 9);
    const auto recovered = extract(setup.host, setup.host, setup.key);
    CHECK(std::all_of(recovered.bits.begin(), recovered.bits.end(),
                      [](std::uint8_t b) { return b == 0; }));
}

TEST_CASE("extract validates dimensions against the key") {
    const auto setup = fixtures::random_setup(32, 32, 10);
    const GrayImage wrong(16, 16);
    CHECK_THROWS_AS(extract(wrong, wrong, setup.key), std::invalid_argument);
    CHECK_THROWS_AS(extract(setup.host, wrong, setup.key), std::invalid_argument);
}

TEST_CASE("a wrong scramble seed decorrelates the recovered mark") {
    const auto host = fixtures::canonical_host();
    const auto mark = fixtures::canonical_mark();
    const auto key = fixtures::canonical_key();
    const auto wm = embed(host, mark, key);

    auto wrong = key;
    wrong.scramble_seed += 1;
    const auto recovered = extract(host, wm, wrong);
    CHECK(recovered != mark);
    const auto corr = ncc(recovered, mark);
    REQUIRE(corr.has_value());
    CHECK(std::abs(*corr) < 0.1);
}

TEST_CASE("placement and readout are inverse for any seeds") {
    // pass-through embedding: nudge each block's sum by +-1 according to the
    // scrambled bit, then check extract restores the original mark
    SplitMix64 rng(31415);
    for (int iter = 0; iter < 25; ++iter) {
        auto setup = fixtures::random_setup(32, 32, rng.next(), 1, 254);
        const BlockGrid grid(32, 32, 4);
        const auto scrambled = scramble_bits(setup.mark.bits, setup.key.scramble_seed);
        const auto perm = fisher_yates(grid.block_count(), setup.key.perm_seed);

        GrayImage nudged = setup.host;
        for (std::size_t i = 0; i < scrambled.size(); ++i) {
            auto block = block_view(setup.host, grid, perm[i]);
            block[0] = static_cast<std::uint8_t>(block[0] + (scrambled[i] ? 1 : -1));
            block_write(nudged, grid, perm[i], block);
        }
        REQUIRE(extract(setup.host, nudged, setup.key) == setup.mark);
    }
}
