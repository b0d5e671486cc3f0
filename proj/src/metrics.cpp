#include "blockmark/metrics.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace blockmark {

namespace {

void check_same_size(bool ok) {
    if (!ok) {
        throw std::invalid_argument("dimension mismatch");
    }
}

} // namespace

double mse(const GrayImage& a, const GrayImage& b) {
    check_same_size(a.same_size(b));
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.pixels.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(a.pixels[i]) - b.pixels[i];
        acc += static_cast<std::uint64_t>(d * d);
    }
    return static_cast<double>(acc) / static_cast<double>(a.pixels.size());
}

double psnr(const GrayImage& a, const GrayImage& b) {
    const double err = mse(a, b);
    if (err == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 10.0 * std::log10(255.0 * 255.0 / err);
}

double ber(const BitMatrix& recovered, const BitMatrix& original) {
    check_same_size(recovered.same_size(original));
    std::size_t flips = 0;
    for (std::size_t i = 0; i < recovered.bits.size(); ++i) {
        flips += recovered.bits[i] != original.bits[i];
    }
    return static_cast<double>(flips) / static_cast<double>(recovered.bits.size());
}

std::optional<double> ncc(const BitMatrix& recovered, const BitMatrix& original) {
    check_same_size(recovered.same_size(original));
    const auto n = static_cast<std::int64_t>(recovered.bits.size());
    std::int64_t sx = 0, sy = 0, sxy = 0;
    for (std::size_t i = 0; i < recovered.bits.size(); ++i) {
        sx += recovered.bits[i];
        sy += original.bits[i];
        sxy += recovered.bits[i] & original.bits[i];
    }
    // For 0/1 data the sum of squares equals the plain sum.
    const std::int64_t var_x = n * sx - sx * sx;
    const std::int64_t var_y = n * sy - sy * sy;
    if (var_x == 0 || var_y == 0) {
        return std::nullopt;
    }
    const double cov = static_cast<double>(n * sxy - sx * sy);
    return cov / (std::sqrt(static_cast<double>(var_x)) * std::sqrt(static_cast<double>(var_y)));
}

} // namespace blockmark
