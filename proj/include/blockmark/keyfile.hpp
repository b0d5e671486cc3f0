#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "blockmark/blocks.hpp"

namespace blockmark {

/// Everything needed to reproduce an embedding and drive extraction:
/// geometry, embedding strength parameters, and the three stream seeds.
struct KeyFile {
    int host_width = 0;
    int host_height = 0;
    int mark_width = 0;
    int mark_height = 0;
    int block_size = 4;
    std::int64_t alpha_num = 1;
    std::int64_t alpha_den = 10;
    int c_min = 2;
    std::uint64_t perm_seed = 0;
    std::uint64_t scramble_seed = 0;
    std::uint64_t delta_seed = 0;

    /// Throws std::invalid_argument when any invariant is violated
    /// (divisibility, block count vs mark bits, parameter ranges).
    void validate() const;

    std::size_t block_count() const {
        return static_cast<std::size_t>(host_width / block_size) *
               static_cast<std::size_t>(host_height / block_size);
    }

    Rational alpha() const { return {alpha_num, alpha_den}; }

    bool operator==(const KeyFile&) const = default;
};

/// Canonical text form: nine LF-terminated lines starting with magic WMK1.
std::string keyfile_serialize(const KeyFile& key);

/// Strict parser for the text form; parse(serialize(k)) == k. Throws
/// ParseError naming the offending line, or std::invalid_argument via
/// validate() for invariant violations.
KeyFile keyfile_parse(std::string_view text);

} // namespace blockmark
