#include <doctest.h>

#include <string>
#include <vector>

#include "blockmark/error.hpp"
#include "blockmark/pnm.hpp"
#include "blockmark/rng.hpp"

using namespace blockmark;

namespace {

std::vector<std::uint8_t> bytes_of(const std::string& s) {
    return {s.begin(), s.end()};
}

} // namespace

TEST_CASE("read_pgm parses a binary P5 stream") {
    auto data = bytes_of("P5\n2 2\n255\n");
    data.insert(data.end(), {0, 64, 128, 255});
    const auto img = read_pgm(data);
    CHECK(img.width == 2);
    CHECK(img.height == 2);
    CHECK(img.pixels == std::vector<std::uint8_t>{0, 64, 128, 255});
}

TEST_CASE("read_pgm parses ASCII P2 with comments") {
    const auto img = read_pgm(bytes_of("P2\n# c\n1 1\n255\n17\n"));
    CHECK(img.width == 1);
    CHECK(img.height == 1);
    CHECK(img.pixels[0] == 17);
}

TEST_CASE("read_pgm reports truncation with the pixel-data offset") {
    auto data = bytes_of("P5\n2 2\n255\n");
    data.insert(data.end(), {1, 2, 3});
    CHECK_THROWS_WITH_AS(read_pgm(data), "pgm: truncated pixel data at offset 3", ParseError);
}

TEST_CASE("read_pgm rejects bad magic and unsupported maxval") {
    CHECK_THROWS_AS(read_pgm(bytes_of("P6\n1 1\n255\nxxx")), ParseError);
    CHECK_THROWS_AS(read_pgm(bytes_of("")), ParseError);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n254\n17\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n65535\n17\n")), ParseError);
    CHECK_THROWS_AS(read_pgm(bytes_of("P2\n1 1\n255\n256\n")), ParseError);
}

TEST_CASE("write_pgm emits the canonical P5 form") {
    const GrayImage one(1, 1, std::vector<std::uint8_t>{0});
    const auto data = write_pgm(one);
    // 11 header bytes "P5\n1 1\n255\n" plus one data byte
    CHECK(data.size() == 12);
    CHECK(std::string(data.begin(), data.begin() + 11) == "P5\n1 1\n255\n");
    CHECK(data[11] == 0);
    CHECK(write_pgm(one) == data);
}

TEST_CASE("pgm round trip is exact on random images") {
    SplitMix64 rng(404);
    for (int iter = 0; iter < 25; ++iter) {
        const int w = static_cast<int>(1 + rng.below(40));
        const int h = static_cast<int>(1 + rng.below(40));
        GrayImage img(w, h);
        for (auto& px : img.pixels) px = static_cast<std::uint8_t>(rng.below(256));
        const auto round = read_pgm(write_pgm(img));
        REQUIRE(round.width == w);
        REQUIRE(round.height == h);
        REQUIRE(round.pixels == img.pixels);
    }
}

TEST_CASE("read_pbm parses ASCII P1") {
    const auto mat = read_pbm(bytes_of("P1\n2 2\n1 0 0 1\n"));
    CHECK(mat.bits == std::vector<std::uint8_t>{1, 0, 0, 1});
    // digits may also run together
    const auto tight = read_pbm(bytes_of("P1\n2 2\n1001\n"));
    CHECK(tight.bits == mat.bits);
    CHECK_THROWS_AS(read_pbm(bytes_of("P1\n2 2\n1 0 2 1\n")), ParseError);
    CHECK_THROWS_AS(read_pbm(bytes_of("P1\n2 2\n1 0\n")), ParseError);
}

TEST_CASE("read_pbm unpacks P4 rows with byte padding") {
    // width 10: two bytes per row, six pad bits ignored
    auto data = bytes_of("P4\n10 2\n");
    data.insert(data.end(), {0xFF, 0xFF, 0x80, 0x7F});
    const auto mat = read_pbm(data);
    CHECK(mat.width == 10);
    CHECK(mat.height == 2);
    for (int x = 0; x < 10; ++x) {
        CHECK(mat.at(x, 0) == 1);
    }
    CHECK(mat.at(0, 1) == 1);
    for (int x = 1; x < 8; ++x) {
        CHECK(mat.at(x, 1) == 0);
    }
    CHECK(mat.at(8, 1) == 0);
    CHECK(mat.at(9, 1) == 1);
}

TEST_CASE("write_pbm packs MSB-first with zero padding") {
    const BitMatrix mat(2, 2, std::vector<std::uint8_t>{1, 0, 0, 1});
    const auto data = write_pbm(mat);
    const std::string header = "P4\n2 2\n";
    REQUIRE(data.size() == header.size() + 2);
    CHECK(std::string(data.begin(), data.begin() + header.size()) == header);
    CHECK(data[header.size()] == 0x80);
    CHECK(data[header.size() + 1] == 0x40);
}

TEST_CASE("pbm round trip is exact on random matrices") {
    SplitMix64 rng(405);
    for (int iter = 0; iter < 25; ++iter) {
        const int w = static_cast<int>(1 + rng.below(50));
        const int h = static_cast<int>(1 + rng.below(20));
        BitMatrix mat(w, h);
        for (auto& b : mat.bits) b = static_cast<std::uint8_t>(rng.below(2));
        const auto round = read_pbm(write_pbm(mat));
        REQUIRE(round == mat);
    }
}

TEST_CASE("pbm truncation is an error") {
    auto data = bytes_of("P4\n10 2\n");
    data.insert(data.end(), {0xFF, 0xFF, 0x80});
    CHECK_THROWS_WITH_AS(read_pbm(data), "pbm: truncated raster data at offset 3", ParseError);
}
