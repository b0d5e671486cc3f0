#pragma once

#include <cstdint>

#include "blockmark/image.hpp"

namespace blockmark {

/// Additive approximately-normal noise, deterministic per seed. Each pixel
/// consumes twelve generator draws (sum-of-uniforms), row-major from one
/// stream; samples round half away from zero and clamp to [0, 255].
GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed);

/// Impulse noise: each pixel is replaced by 0 or 255 (equal odds) with
/// probability p, deterministic per seed.
GrayImage salt_pepper(const GrayImage& img, double p, std::uint64_t seed);

/// k x k box average with the window clipped at image borders (averages run
/// over in-bounds pixels only), rounding halves up. k must be odd.
GrayImage mean_filter(const GrayImage& img, int k);

/// k x k median with clipped windows; even in-bounds counts take the lower
/// median. k must be odd.
GrayImage median_filter(const GrayImage& img, int k);

/// Adds a constant offset to every pixel, clamped to [0, 255].
GrayImage brightness_shift(const GrayImage& img, int offset);

/// JPEG-style lossy requantization: per 8x8 block, forward DCT, divide and
/// round by the standard luminance table scaled by the quality factor
/// (1..100), then reconstruct. Image dimensions must be divisible by 8.
GrayImage dct_quantize(const GrayImage& img, int quality);

} // namespace blockmark
