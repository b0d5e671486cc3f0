#include "blockmark/attacks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "blockmark/rng.hpp"

namespace blockmark {

namespace {

constexpr double kTwo32 = 4294967296.0;

std::uint8_t clamp_intensity(std::int64_t v) {
    return static_cast<std::uint8_t>(std::clamp<std::int64_t>(v, 0, 255));
}

void require_odd_window(int k) {
    if (k < 1 || k % 2 == 0) {
        throw std::invalid_argument("window size must be odd and >= 1");
    }
}

} // namespace

GrayImage gaussian_noise(const GrayImage& img, double sigma, std::uint64_t seed) {
    if (sigma < 0.0) {
        throw std::invalid_argument("sigma must be >= 0");
    }
    SplitMix64 rng(seed);
    GrayImage out = img;
    for (auto& px : out.pixels) {
        double acc = 0.0;
        for (int d = 0; d < 12; ++d) {
            acc += static_cast<double>(rng.below(1ULL << 32)) / kTwo32;
        }
        const auto offset = std::llround(sigma * (acc - 6.0));
        px = clamp_intensity(static_cast<std::int64_t>(px) + offset);
    }
    return out;
}

GrayImage salt_pepper(const GrayImage& img, double p, std::uint64_t seed) {
    if (p < 0.0 || p > 1.0) {
        throw std::invalid_argument("p must be in [0, 1]");
    }
    SplitMix64 rng(seed);
    GrayImage out = img;
    for (auto& px : out.pixels) {
        const double u = static_cast<double>(rng.below(1ULL << 32)) / kTwo32;
        if (u < p) {
            px = rng.below(2) ? 255 : 0;
        }
    }
    return out;
}

GrayImage mean_filter(const GrayImage& img, int k) {
    require_odd_window(k);
    const int r = k / 2;
    GrayImage out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        const int y0 = std::max(0, y - r), y1 = std::min(img.height - 1, y + r);
        for (int x = 0; x < img.width; ++x) {
            const int x0 = std::max(0, x - r), x1 = std::min(img.width - 1, x + r);
            std::int64_t sum = 0;
            for (int wy = y0; wy <= y1; ++wy) {
                for (int wx = x0; wx <= x1; ++wx) {
                    sum += img.at(wx, wy);
                }
            }
            const std::int64_t cnt = static_cast<std::int64_t>(y1 - y0 + 1) * (x1 - x0 + 1);
            out.at(x, y) = static_cast<std::uint8_t>((2 * sum + cnt) / (2 * cnt));
        }
    }
    return out;
}

GrayImage median_filter(const GrayImage& img, int k) {
    require_odd_window(k);
    const int r = k / 2;
    GrayImage out(img.width, img.height);
    std::vector<std::uint8_t> window;
    window.reserve(static_cast<std::size_t>(k) * k);
    for (int y = 0; y < img.height; ++y) {
        const int y0 = std::max(0, y - r), y1 = std::min(img.height - 1, y + r);
        for (int x = 0; x < img.width; ++x) {
            const int x0 = std::max(0, x - r), x1 = std::min(img.width - 1, x + r);
            window.clear();
            for (int wy = y0; wy <= y1; ++wy) {
                for (int wx = x0; wx <= x1; ++wx) {
                    window.push_back(img.at(wx, wy));
                }
            }
            // lower median for even counts
            const auto mid = window.begin() + (window.size() - 1) / 2;
            std::nth_element(window.begin(), mid, window.end());
            out.at(x, y) = *mid;
        }
    }
    return out;
}

GrayImage brightness_shift(const GrayImage& img, int offset) {
    GrayImage out = img;
    for (auto& px : out.pixels) {
        px = clamp_intensity(static_cast<std::int64_t>(px) + offset);
    }
    return out;
}

namespace {

// ITU-T T.81 Annex K luminance quantization table, raster order.
constexpr std::array<int, 64> kBaseLumaQuant = {
    16, 11, 10, 16, 24,  40,  51,  61,  //
    12, 12, 14, 19, 26,  58,  60,  55,  //
    14, 13, 16, 24, 40,  57,  69,  56,  //
    14, 17, 22, 29, 51,  87,  80,  62,  //
    18, 22, 37, 56, 68,  109, 103, 77,  //
    24, 35, 55, 64, 81,  104, 113, 92,  //
    49, 64, 78, 87, 103, 121, 120, 101, //
    72, 92, 95, 98, 112, 100, 103, 99,
};

std::array<int, 64> scaled_quant_table(int quality) {
    const int scale = quality < 50 ? 5000 / quality : 200 - 2 * quality;
    std::array<int, 64> q{};
    for (int i = 0; i < 64; ++i) {
        q[i] = std::clamp((kBaseLumaQuant[i] * scale + 50) / 100, 1, 255);
    }
    return q;
}

struct DctBasis {
    // basis[u][x] = C(u) * cos((2x+1) u pi / 16) with C(0) = 1/sqrt(2)
    std::array<std::array<double, 8>, 8> basis{};
    DctBasis() {
        for (int u = 0; u < 8; ++u) {
            const double cu = u == 0 ? 1.0 / std::numbers::sqrt2 : 1.0;
            for (int x = 0; x < 8; ++x) {
                basis[u][x] = cu * std::cos((2 * x + 1) * u * std::numbers::pi / 16.0);
            }
        }
    }
};

const DctBasis kDct;

// Separable 8x8 type-II DCT with the JPEG 1/4 normalization.
void forward_dct(const double in[64], double out[64]) {
    double tmp[64];
    for (int y = 0; y < 8; ++y) {
        for (int u = 0; u < 8; ++u) {
            double acc = 0.0;
            for (int x = 0; x < 8; ++x) acc += in[y * 8 + x] * kDct.basis[u][x];
            tmp[y * 8 + u] = acc;
        }
    }
    for (int u = 0; u < 8; ++u) {
        for (int v = 0; v < 8; ++v) {
            double acc = 0.0;
            for (int y = 0; y < 8; ++y) acc += tmp[y * 8 + u] * kDct.basis[v][y];
            out[v * 8 + u] = acc * 0.25;
        }
    }
}

void inverse_dct(const double in[64], double out[64]) {
    double tmp[64];
    for (int v = 0; v < 8; ++v) {
        for (int x = 0; x < 8; ++x) {
            double acc = 0.0;
            for (int u = 0; u < 8; ++u) acc += in[v * 8 + u] * kDct.basis[u][x];
            tmp[v * 8 + x] = acc;
        }
    }
    for (int x = 0; x < 8; ++x) {
        for (int y = 0; y < 8; ++y) {
            double acc = 0.0;
            for (int v = 0; v < 8; ++v) acc += tmp[v * 8 + x] * kDct.basis[v][y];
            out[y * 8 + x] = acc * 0.25;
        }
    }
}

} // namespace

GrayImage dct_quantize(const GrayImage& img, int quality) {
    if (quality < 1 || quality > 100) {
        throw std::invalid_argument("quality must be in [1, 100]");
    }
    if (img.width % 8 != 0 || img.height % 8 != 0) {
        throw std::invalid_argument("image dimensions must be divisible by 8");
    }
    const auto quant = scaled_quant_table(quality);
    GrayImage out(img.width, img.height);
    double block[64], coeffs[64], restored[64];
    for (int by = 0; by < img.height; by += 8) {
        for (int bx = 0; bx < img.width; bx += 8) {
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    block[y * 8 + x] = static_cast<double>(img.at(bx + x, by + y)) - 128.0;
                }
            }
            forward_dct(block, coeffs);
            for (int i = 0; i < 64; ++i) {
                coeffs[i] = static_cast<double>(std::llround(coeffs[i] / quant[i])) * quant[i];
            }
            inverse_dct(coeffs, restored);
            for (int y = 0; y < 8; ++y) {
                for (int x = 0; x < 8; ++x) {
                    out.at(bx + x, by + y) =
                        clamp_intensity(std::llround(restored[y * 8 + x] + 128.0));
                }
            }
        }
    }
    return out;
}

} // namespace blockmark
