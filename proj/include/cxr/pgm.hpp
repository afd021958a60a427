#pragma once

#include <filesystem>

#include "cxr/image.hpp"

namespace cxr::pgm {

/// Binary (P5) PGM. Images with bit depth > 8 are written with two-byte
/// big-endian samples, as the format prescribes for maxval > 255.
void write_image(const std::filesystem::path& path, const ImageGrid& image);

/// Reads a P5 file. The bit depth is the smallest of {8, 12, 16} that covers
/// the file's maxval.
ImageGrid read_image(const std::filesystem::path& path);

/// Masks are written as 8-bit P5 with values 0 / 255.
void write_mask(const std::filesystem::path& path, const BinaryMask& mask);

/// Reads a mask image and binarizes it at the given threshold.
BinaryMask read_mask(const std::filesystem::path& path, std::uint16_t threshold = 128);

}  // namespace cxr::pgm
