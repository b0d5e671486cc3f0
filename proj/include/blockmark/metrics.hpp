#pragma once

#include <optional>

#include "blockmark/image.hpp"

namespace blockmark {

/// Mean squared error; squared differences accumulate in exact integer
/// arithmetic before the single final division.
double mse(const GrayImage& a, const GrayImage& b);

/// Peak signal-to-noise ratio in dB against peak 255; +infinity for
/// identical images.
double psnr(const GrayImage& a, const GrayImage& b);

/// Fraction of differing bits, in [0, 1].
double ber(const BitMatrix& recovered, const BitMatrix& original);

/// Pearson correlation of the two bit sequences. Empty when either input
/// has zero variance (all-equal bits), where correlation is undefined.
std::optional<double> ncc(const BitMatrix& recovered, const BitMatrix& original);

} // namespace blockmark
