#pragma once

#include <cstdint>
#include <vector>

#include "blockmark/image.hpp"
#include "blockmark/keyfile.hpp"
#include "blockmark/rng.hpp"

namespace fixtures {

/// 512x512 gradient host with intensities 2..252 (no saturation anywhere).
inline blockmark::GrayImage canonical_host() {
    blockmark::GrayImage img(512, 512);
    for (int y = 0; y < 512; ++y) {
        for (int x = 0; x < 512; ++x) {
            img.at(x, y) = static_cast<std::uint8_t>((x + 2 * y) % 251 + 2);
        }
    }
    return img;
}

/// 128x128 checkerboard mark with 8x8-bit cells, exactly half ones.
inline blockmark::BitMatrix canonical_mark() {
    blockmark::BitMatrix mat(128, 128);
    for (int y = 0; y < 128; ++y) {
        for (int x = 0; x < 128; ++x) {
            mat.at(x, y) = static_cast<std::uint8_t>((x / 8 + y / 8) % 2 == 0 ? 1 : 0);
        }
    }
    return mat;
}

inline blockmark::KeyFile canonical_key() {
    blockmark::KeyFile key;
    key.host_width = 512;
    key.host_height = 512;
    key.mark_width = 128;
    key.mark_height = 128;
    key.block_size = 4;
    key.alpha_num = 1;
    key.alpha_den = 10;
    key.c_min = 2;
    key.perm_seed = 1;
    key.scramble_seed = 2;
    key.delta_seed = 3;
    return key;
}

/// Small host/mark/key trio for fast tests: w x h host, block size 4.
struct SmallSetup {
    blockmark::GrayImage host;
    blockmark::BitMatrix mark;
    blockmark::KeyFile key;
};

/// Random host with intensities in [lo, hi], random mark, matching key.
inline SmallSetup random_setup(int host_w, int host_h, std::uint64_t seed, int lo = 1,
                               int hi = 254) {
    blockmark::SplitMix64 rng(seed);
    blockmark::GrayImage host(host_w, host_h);
    for (auto& px : host.pixels) {
        px = static_cast<std::uint8_t>(lo + rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
    blockmark::KeyFile key;
    key.host_width = host_w;
    key.host_height = host_h;
    key.mark_width = host_w / 4;
    key.mark_height = host_h / 4;
    key.block_size = 4;
    key.alpha_num = 1;
    key.alpha_den = 10;
    key.c_min = 2;
    key.perm_seed = rng.next();
    key.scramble_seed = rng.next();
    key.delta_seed = rng.next();
    blockmark::BitMatrix mark(key.mark_width, key.mark_height);
    for (auto& b : mark.bits) {
        b = static_cast<std::uint8_t>(rng.below(2));
    }
    return {std::move(host), std::move(mark), key};
}

} // namespace fixtures
