#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "blockmark/image.hpp"

namespace blockmark {

/// Parses a PGM stream, binary (P5) or ASCII (P2). Only maxval 255 is
/// accepted. Header whitespace and '#' comments are tolerated; P5 pixel data
/// starts exactly one whitespace byte after the maxval token. Throws
/// ParseError (bad magic, unsupported maxval, truncation with byte offset).
GrayImage read_pgm(std::span<const std::uint8_t> bytes);

/// Canonical P5 writer: "P5\n<w> <h>\n255\n" + raw rows. Same image, same
/// bytes, always; read_pgm(write_pgm(x)) == x.
std::vector<std::uint8_t> write_pgm(const GrayImage& image);

/// Parses a PBM stream, packed binary (P4, rows padded to byte boundaries)
/// or ASCII (P1). Bit 1 corresponds to PBM black.
BitMatrix read_pbm(std::span<const std::uint8_t> bytes);

/// Canonical P4 writer; row padding bits are zero.
std::vector<std::uint8_t> write_pbm(const BitMatrix& mat);

} // namespace blockmark
