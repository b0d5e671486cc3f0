#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "blockmark/metrics.hpp"

using namespace blockmark;

TEST_CASE("mse") {
    const GrayImage a(2, 1, std::vector<std::uint8_t>{0, 0});
    const GrayImage b(2, 1, std::vector<std::uint8_t>{3, 4});
    CHECK(mse(a, a) == 0.0);
    CHECK(mse(a, b) == doctest::Approx(12.5));

    const GrayImage c(4, 4, 10);
    const GrayImage d(4, 4, 11);
    CHECK(mse(c, d) == 1.0);

    const GrayImage wide(3, 1);
    CHECK_THROWS_AS(mse(a, wide), std::invalid_argument);
}

TEST_CASE("psnr") {
    const GrayImage a(4, 4, 10);
    CHECK(std::isinf(psnr(a, a)));

    GrayImage b = a;
    for (auto& px : b.pixels) px += 1; // mse == 1
    CHECK(psnr(a, b) == doctest::Approx(48.1308036086791));
    CHECK(psnr(a, b) == psnr(b, a));

    // mse == 255^2 gives exactly 0 dB
    const GrayImage black(2, 2, 0);
    const GrayImage white(2, 2, 255);
    CHECK(psnr(black, white) == doctest::Approx(0.0));
}

TEST_CASE("ber counts differing bits") {
    const BitMatrix m(4, 4, std::vector<std::uint8_t>(16, 1));
    BitMatrix flipped = m;
    CHECK(ber(m, m) == 0.0);
    for (auto& b : flipped.bits) b = 0;
    CHECK(ber(m, flipped) == 1.0);
    flipped = m;
    flipped.bits[3] = 0;
    flipped.bits[9] = 0;
    CHECK(ber(m, flipped) == doctest::Approx(2.0 / 16.0));
    CHECK(ber(m, flipped) == ber(flipped, m));
}

TEST_CASE("ncc on balanced sequences") {
    BitMatrix balanced(4, 4);
    for (int i = 0; i < 8; ++i) balanced.bits[i] = 1;
    CHECK(ncc(balanced, balanced) == doctest::Approx(1.0));

    BitMatrix complement = balanced;
    for (auto& b : complement.bits) b ^= 1;
    CHECK(ncc(balanced, complement) == doctest::Approx(-1.0));
    CHECK(*ncc(balanced, complement) == *ncc(complement, balanced));
}

TEST_CASE("ncc is undefined for zero-variance inputs") {
    BitMatrix balanced(4, 4);
    for (int i = 0; i < 8; ++i) balanced.bits[i] = 1;
    const BitMatrix zeros(4, 4, 0);
    CHECK_FALSE(ncc(zeros, balanced).has_value());
    CHECK_FALSE(ncc(balanced, zeros).has_value());
}
