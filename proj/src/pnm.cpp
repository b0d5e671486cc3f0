#include "blockmark/pnm.hpp"

#include <string>

#include "blockmark/error.hpp"

namespace blockmark {

namespace {

bool is_pnm_space(std::uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Header scanner shared by all formats: tracks a cursor over the raw bytes.
struct Cursor {
    std::span<const std::uint8_t> bytes;
    std::size_t pos = 0;
    const char* format; // "pgm" or "pbm", for error messages

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(std::string(format) + ": " + what);
    }

    bool eof() const { return pos >= bytes.size(); }

    void skip_space_and_comments() {
        while (!eof()) {
            const std::uint8_t c = bytes[pos];
            if (c == '#') {
                while (!eof() && bytes[pos] != '\n') ++pos;
            } else if (is_pnm_space(c)) {
                ++pos;
            } else {
                break;
            }
        }
    }

    // Nonnegative decimal token preceded by whitespace/comments.
    long read_number(const char* what) {
        skip_space_and_comments();
        if (eof()) fail(std::string("unexpected end of data reading ") + what);
        if (bytes[pos] < '0' || bytes[pos] > '9') {
            fail(std::string("expected ") + what + " digit, got byte " +
                 std::to_string(bytes[pos]) + " at offset " + std::to_string(pos));
        }
        long value = 0;
        while (!eof() && bytes[pos] >= '0' && bytes[pos] <= '9') {
            value = value * 10 + (bytes[pos] - '0');
            if (value > 1'000'000'000L) fail(std::string(what) + " out of range");
            ++pos;
        }
        return value;
    }

    // Raw data must begin exactly one whitespace byte after the last
    // header token.
    void expect_single_space_before_raster() {
        if (eof() || !is_pnm_space(bytes[pos])) {
            fail("expected single whitespace byte before raster data");
        }
        ++pos;
    }
};

} // namespace

GrayImage read_pgm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes, 0, "pgm"};
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '5' && bytes[1] != '2')) {
        cur.fail("bad magic (want P5 or P2)");
    }
    const bool binary = bytes[1] == '5';
    cur.pos = 2;

    const long width = cur.read_number("width");
    const long height = cur.read_number("height");
    const long maxval = cur.read_number("maxval");
    if (maxval != 255) {
        cur.fail("unsupported maxval " + std::to_string(maxval) + " (only 255)");
    }
    if (width <= 0 || height <= 0) {
        cur.fail("dimensions must be positive");
    }
    const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    std::vector<std::uint8_t> pixels;
    pixels.reserve(count);

    if (binary) {
        cur.expect_single_space_before_raster();
        const std::size_t available = bytes.size() - cur.pos;
        if (available < count) {
            cur.fail("truncated pixel data at offset " + std::to_string(available));
        }
        pixels.assign(bytes.begin() + cur.pos, bytes.begin() + cur.pos + count);
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            cur.skip_space_and_comments();
            if (cur.eof()) {
                cur.fail("truncated pixel data at byte offset " + std::to_string(cur.pos));
            }
            const long v = cur.read_number("pixel");
            if (v > 255) {
                cur.fail("pixel value " + std::to_string(v) + " exceeds 255");
            }
            pixels.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return GrayImage(static_cast<int>(width), static_cast<int>(height), std::move(pixels));
}

std::vector<std::uint8_t> write_pgm(const GrayImage& image) {
    const std::string header = "P5\n" + std::to_string(image.width) + " " +
                               std::to_string(image.height) + "\n255\n";
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.insert(out.end(), image.pixels.begin(), image.pixels.end());
    return out;
}

BitMatrix read_pbm(std::span<const std::uint8_t> bytes) {
    Cursor cur{bytes, 0, "pbm"};
    if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '4' && bytes[1] != '1')) {
        cur.fail("bad magic (want P4 or P1)");
    }
    const bool packed = bytes[1] == '4';
    cur.pos = 2;

    const long width = cur.read_number("width");
    const long height = cur.read_number("height");
    if (width <= 0 || height <= 0) {
        cur.fail("dimensions must be positive");
    }
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(width) *
                                   static_cast<std::size_t>(height));

    if (packed) {
        cur.expect_single_space_before_raster();
        const std::size_t row_bytes = (static_cast<std::size_t>(width) + 7) / 8;
        const std::size_t need = row_bytes * static_cast<std::size_t>(height);
        const std::size_t available = bytes.size() - cur.pos;
        if (available < need) {
            cur.fail("truncated raster data at offset " + std::to_string(available));
        }
        for (long y = 0; y < height; ++y) {
            const std::size_t row_start = cur.pos + static_cast<std::size_t>(y) * row_bytes;
            for (long x = 0; x < width; ++x) {
                const std::uint8_t byte = bytes[row_start + static_cast<std::size_t>(x) / 8];
                const int bit = (byte >> (7 - (x % 8))) & 1; // MSB first, pad bits ignored
                bits[static_cast<std::size_t>(y) * width + x] = static_cast<std::uint8_t>(bit);
            }
        }
    } else {
        for (std::size_t i = 0; i < bits.size(); ++i) {
            cur.skip_space_and_comments();
            if (cur.eof()) {
                cur.fail("truncated bit data at byte offset " + std::to_string(cur.pos));
            }
            const std::uint8_t c = bytes[cur.pos];
            if (c != '0' && c != '1') {
                cur.fail("expected bit 0 or 1, got byte " + std::to_string(c) +
                         " at offset " + std::to_string(cur.pos));
            }
            bits[i] = static_cast<std::uint8_t>(c - '0');
            ++cur.pos;
        }
    }
    return BitMatrix(static_cast<int>(width), static_cast<int>(height), std::move(bits));
}

std::vector<std::uint8_t> write_pbm(const BitMatrix& mat) {
    const std::string header = "P4\n" + std::to_string(mat.width) + " " +
                               std::to_string(mat.height) + "\n";
    const std::size_t row_bytes = (static_cast<std::size_t>(mat.width) + 7) / 8;
    std::vector<std::uint8_t> out(header.begin(), header.end());
    out.resize(header.size() + row_bytes * static_cast<std::size_t>(mat.height), 0);
    for (int y = 0; y < mat.height; ++y) {
        const std::size_t row_start = header.size() + static_cast<std::size_t>(y) * row_bytes;
        for (int x = 0; x < mat.width; ++x) {
            if (mat.at(x, y)) {
                out[row_start + static_cast<std::size_t>(x) / 8] |=
                    static_cast<std::uint8_t>(0x80u >> (x % 8));
            }
        }
    }
    return out;
}

} // namespace blockmark
