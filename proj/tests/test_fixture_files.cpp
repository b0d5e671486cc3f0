#include <doctest.h>

#include <fstream>
#include <string>
#include <vector>

#include "blockmark/keyfile.hpp"
#include "blockmark/pnm.hpp"

#include "support/fixtures.hpp"

using namespace blockmark;

namespace {

std::vector<std::uint8_t> slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE_MESSAGE(f.good(), "missing fixture file ", path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

// The shipped sample files must stay in sync with the generators the tests
// and docs rely on.
TEST_CASE("shipped fixture files match their generators") {
    const std::string dir = BLOCKMARK_DATA_DIR;
    CHECK(slurp(dir + "/host_512.pgm") == write_pgm(fixtures::canonical_host()));
    CHECK(slurp(dir + "/mark_128.pbm") == write_pbm(fixtures::canonical_mark()));

    const auto key_bytes = slurp(dir + "/sample.wmk");
    const std::string key_text(key_bytes.begin(), key_bytes.end());
    CHECK(key_text == keyfile_serialize(fixtures::canonical_key()));
}
