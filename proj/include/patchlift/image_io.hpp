#pragma once

#include <cstdint>
#include <string>

#include "patchlift/core_types.hpp"

namespace patchlift {

// Round half away from zero, then clamp to [0, 255].
std::uint8_t quantize_u8(double v);

// Reads a P5 (binary) or P2 (ASCII) PGM with maxval 255. Header comments
// starting with '#' are accepted. Throws IoError on malformed input.
Image2D read_pgm(const std::string& path);

// Writes a binary P5 PGM, quantizing each sample with quantize_u8.
void write_pgm(const Image2D& img, const std::string& path);

// One real value per line; scientific notation accepted.
Signal1D read_signal_csv(const std::string& path);

// Writes one sample per line with 12 significant digits.
void write_signal_csv(const Signal1D& sig, const std::string& path);

}  // namespace patchlift
