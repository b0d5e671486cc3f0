#include "blockmark/keyfile.hpp"

#include <charconv>
#include <stdexcept>
#include <vector>

#include "blockmark/error.hpp"

namespace blockmark {

void KeyFile::validate() const {
    if (host_width <= 0 || host_height <= 0) {
        throw std::invalid_argument("host dimensions must be positive");
    }
    if (mark_width <= 0 || mark_height <= 0) {
        throw std::invalid_argument("mark dimensions must be positive");
    }
    if (block_size <= 0) {
        throw std::invalid_argument("block size must be positive");
    }
    if (host_width % block_size != 0 || host_height % block_size != 0) {
        throw std::invalid_argument("host not divisible by block size");
    }
    if (alpha_num < 0) {
        throw std::invalid_argument("alpha numerator must be >= 0");
    }
    if (alpha_den < 1) {
        throw std::invalid_argument("alpha denominator must be >= 1");
    }
    if (c_min < 1 || c_min > 255) {
        throw std::invalid_argument("cmin must be in [1, 255]");
    }
    const std::size_t mark_bits =
        static_cast<std::size_t>(mark_width) * static_cast<std::size_t>(mark_height);
    if (block_count() != mark_bits) {
        throw std::invalid_argument("block count " + std::to_string(block_count()) +
                                    " != mark bits " + std::to_string(mark_bits));
    }
}

std::string keyfile_serialize(const KeyFile& key) {
    std::string out;
    out += "WMK1\n";
    out += "host " + std::to_string(key.host_width) + " " + std::to_string(key.host_height) + "\n";
    out += "mark " + std::to_string(key.mark_width) + " " + std::to_string(key.mark_height) + "\n";
    out += "block " + std::to_string(key.block_size) + "\n";
    out += "alpha " + std::to_string(key.alpha_num) + "/" + std::to_string(key.alpha_den) + "\n";
    out += "cmin " + std::to_string(key.c_min) + "\n";
    out += "perm_seed " + std::to_string(key.perm_seed) + "\n";
    out += "scramble_seed " + std::to_string(key.scramble_seed) + "\n";
    out += "delta_seed " + std::to_string(key.delta_seed) + "\n";
    return out;
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("key file line " + std::to_string(line) + ": " + what);
}

// Strict decimal parse of the whole token; no sign, no leading '+'.
template <typename T>
T parse_int(std::string_view token, int line) {
    T value{};
    const auto* end = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), end, value, 10);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        fail(line, "expected integer, got '" + std::string(token) + "'");
    }
    return value;
}

// Splits "a b" on a single space; rejects other whitespace shapes.
std::pair<std::string_view, std::string_view> split_pair(std::string_view rest, int line) {
    const auto pos = rest.find(' ');
    if (pos == std::string_view::npos || rest.find(' ', pos + 1) != std::string_view::npos) {
        fail(line, "expected two space-separated values");
    }
    return {rest.substr(0, pos), rest.substr(pos + 1)};
}

std::string_view expect_prefix(std::string_view full, std::string_view prefix, int line) {
    if (full.substr(0, prefix.size()) != prefix) {
        fail(line, "expected '" + std::string(prefix) + "<value>'");
    }
    return full.substr(prefix.size());
}

} // namespace

KeyFile keyfile_parse(std::string_view text) {
    if (text.empty() || text.back() != '\n') {
        throw ParseError("key file: missing trailing newline");
    }
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const auto nl = text.find('\n', start);
        lines.push_back(text.substr(start, nl - start));
        start = nl + 1;
    }
    if (lines.size() != 9) {
        throw ParseError("key file: expected 9 lines, got " + std::to_string(lines.size()));
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].find('\r') != std::string_view::npos ||
            lines[i].find('\t') != std::string_view::npos) {
            fail(static_cast<int>(i + 1), "only single spaces allowed");
        }
    }
    if (lines[0] != "WMK1") {
        fail(1, "bad magic '" + std::string(lines[0]) + "'");
    }

    KeyFile key;
    {
        const auto [w, h] = split_pair(expect_prefix(lines[1], "host ", 2), 2);
        key.host_width = parse_int<int>(w, 2);
        key.host_height = parse_int<int>(h, 2);
    }
    {
        const auto [w, h] = split_pair(expect_prefix(lines[2], "mark ", 3), 3);
        key.mark_width = parse_int<int>(w, 3);
        key.mark_height = parse_int<int>(h, 3);
    }
    key.block_size = parse_int<int>(expect_prefix(lines[3], "block ", 4), 4);
    {
        const auto rest = expect_prefix(lines[4], "alpha ", 5);
        const auto slash = rest.find('/');
        if (slash == std::string_view::npos || rest.find('/', slash + 1) != std::string_view::npos) {
            fail(5, "expected '<num>/<den>'");
        }
        key.alpha_num = parse_int<std::int64_t>(rest.substr(0, slash), 5);
        key.alpha_den = parse_int<std::int64_t>(rest.substr(slash + 1), 5);
    }
    key.c_min = parse_int<int>(expect_prefix(lines[5], "cmin ", 6), 6);
    key.perm_seed = parse_int<std::uint64_t>(expect_prefix(lines[6], "perm_seed ", 7), 7);
    key.scramble_seed = parse_int<std::uint64_t>(expect_prefix(lines[7], "scramble_seed ", 8), 8);
    key.delta_seed = parse_int<std::uint64_t>(expect_prefix(lines[8], "delta_seed ", 9), 9);

    try {
        key.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("key file: ") + e.what());
    }
    return key;
}

} // namespace blockmark
