#include "blockmark/image.hpp"

#include <stdexcept>
#include <string>

namespace blockmark {

namespace {

void check_dims(int w, int h, const char* what) {
    if (w <= 0 || h <= 0) {
        throw std::invalid_argument(std::string(what) + " dimensions must be positive, got " +
                                    std::to_string(w) + "x" + std::to_string(h));
    }
}

} // namespace

GrayImage::GrayImage(int w, int h, std::uint8_t fill)
    : width(w), height(h), pixels(static_cast<std::size_t>(w) * h, fill) {
    check_dims(w, h, "image");
}

GrayImage::GrayImage(int w, int h, std::vector<std::uint8_t> data)
    : width(w), height(h), pixels(std::move(data)) {
    check_dims(w, h, "image");
    if (pixels.size() != static_cast<std::size_t>(w) * h) {
        throw std::invalid_argument("image pixel count " + std::to_string(pixels.size()) +
                                    " != " + std::to_string(w) + "x" + std::to_string(h));
    }
}

BitMatrix::BitMatrix(int w, int h, std::uint8_t fill)
    : width(w), height(h), bits(static_cast<std::size_t>(w) * h, fill) {
    check_dims(w, h, "bit matrix");
    if (fill > 1) {
        throw std::invalid_argument("bit fill value must be 0 or 1");
    }
}

BitMatrix::BitMatrix(int w, int h, std::vector<std::uint8_t> data)
    : width(w), height(h), bits(std::move(data)) {
    check_dims(w, h, "bit matrix");
    if (bits.size() != static_cast<std::size_t>(w) * h) {
        throw std::invalid_argument("bit count " + std::to_string(bits.size()) + " != " +
                                    std::to_string(w) + "x" + std::to_string(h));
    }
    for (std::uint8_t b : bits) {
        if (b > 1) {
            throw std::invalid_argument("bit values must be 0 or 1");
        }
    }
}

} // namespace blockmark
