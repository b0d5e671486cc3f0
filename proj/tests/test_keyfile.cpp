#include <doctest.h>

#include <string>

#include "blockmark/error.hpp"
#include "blockmark/keyfile.hpp"

#include "support/fixtures.hpp"

using namespace blockmark;

namespace {

std::string canonical_text() {
    return "WMK1\n"
           "host 512 512\n"
           "mark 128 128\n"
           "block 4\n"
           "alpha 1/10\n"
           "cmin 2\n"
           "perm_seed 1\n"
           "scramble_seed 2\n"
           "delta_seed 3\n";
}

} // namespace

TEST_CASE("canonical key serializes to the exact text form") {
    CHECK(keyfile_serialize(fixtures::canonical_key()) == canonical_text());
}

TEST_CASE("parse then serialize round-trips byte-identically") {
    const auto key = keyfile_parse(canonical_text());
    CHECK(key == fixtures::canonical_key());
    CHECK(keyfile_serialize(key) == canonical_text());
}

TEST_CASE("parse validates the host/block divisibility invariant") {
    auto text = canonical_text();
    text.replace(text.find("host 512 512"), 12, "host 510 510");
    CHECK_THROWS_WITH_AS(keyfile_parse(text),
                         "key file: host not divisible by block size", ParseError);
}

TEST_CASE("parse validates block count against mark bits") {
    auto text = canonical_text();
    text.replace(text.find("host 512 512"), 12, "host 256 256");
    CHECK_THROWS_WITH_AS(keyfile_parse(text),
                         "key file: block count 4096 != mark bits 16384", ParseError);
}

TEST_CASE("parse rejects malformed inputs naming the line") {
    CHECK_THROWS_AS(keyfile_parse("WMK2\nrest\n"), ParseError);
    CHECK_THROWS_AS(keyfile_parse(""), ParseError);

    auto no_trailing = canonical_text();
    no_trailing.pop_back();
    CHECK_THROWS_AS(keyfile_parse(no_trailing), ParseError);

    auto bad_int = canonical_text();
    bad_int.replace(bad_int.find("cmin 2"), 6, "cmin x");
    CHECK_THROWS_WITH_AS(keyfile_parse(bad_int),
                         "key file line 6: expected integer, got 'x'", ParseError);

    auto extra_space = canonical_text();
    extra_space.replace(extra_space.find("host 512 512"), 12, "host 512  512");
    CHECK_THROWS_AS(keyfile_parse(extra_space), ParseError);

    auto missing_line = canonical_text();
    missing_line.erase(missing_line.find("delta_seed 3\n"));
    CHECK_THROWS_AS(keyfile_parse(missing_line), ParseError);

    auto negative = canonical_text();
    negative.replace(negative.find("alpha 1/10"), 10, "alpha -1/10");
    CHECK_THROWS_AS(keyfile_parse(negative), ParseError);
}

TEST_CASE("validate enforces parameter ranges") {
    auto key = fixtures::canonical_key();
    key.c_min = 0;
    CHECK_THROWS_AS(key.validate(), std::invalid_argument);
    key.c_min = 256;
    CHECK_THROWS_AS(key.validate(), std::invalid_argument);
    key = fixtures::canonical_key();
    key.alpha_den = 0;
    CHECK_THROWS_AS(key.validate(), std::invalid_argument);
    key = fixtures::canonical_key();
    key.mark_width = 0;
    CHECK_THROWS_AS(key.validate(), std::invalid_argument);
}

TEST_CASE("u64 seeds survive the text form") {
    auto key = fixtures::canonical_key();
    key.perm_seed = 18446744073709551615ULL; // 2^64 - 1
    key.scramble_seed = 0;
    CHECK(keyfile_parse(keyfile_serialize(key)) == key);
}
