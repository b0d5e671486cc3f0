#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace blockmark {

/// 8-bit grayscale image, row-major. Immutable by convention once built;
/// operations return new images instead of mutating in place.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    GrayImage() = default;
    GrayImage(int w, int h, std::uint8_t fill = 0);
    GrayImage(int w, int h, std::vector<std::uint8_t> data);

    std::size_t size() const { return pixels.size(); }
    bool same_size(const GrayImage& other) const {
        return width == other.width && height == other.height;
    }

    std::uint8_t at(int x, int y) const {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return pixels[static_cast<std::size_t>(y) * width + x];
    }
};

/// Binary matrix, row-major, one byte per bit (values 0 or 1).
struct BitMatrix {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BitMatrix() = default;
    BitMatrix(int w, int h, std::uint8_t fill = 0);
    BitMatrix(int w, int h, std::vector<std::uint8_t> data);

    std::size_t size() const { return bits.size(); }
    bool same_size(const BitMatrix& other) const {
        return width == other.width && height == other.height;
    }

    std::uint8_t at(int x, int y) const {
        return bits[static_cast<std::size_t>(y) * width + x];
    }
    std::uint8_t& at(int x, int y) {
        return bits[static_cast<std::size_t>(y) * width + x];
    }

    bool operator==(const BitMatrix&) const = default;
};

} // namespace blockmark
