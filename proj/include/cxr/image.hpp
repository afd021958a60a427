#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cxr {

enum class ByteOrder { big_endian, little_endian };

/// Layout of a headerless raw radiograph file. Samples are always two bytes;
/// the declared file size must equal width * height * 2.
struct RawLayout {
    int width = 2048;
    int height = 2048;
    ByteOrder byte_order = ByteOrder::big_endian;
    int bit_depth = 12;
};

/// Rectangular grid of unsigned intensities with a declared bit depth.
/// Pixels are stored row-major; every value must be < 2^bit_depth.
struct ImageGrid {
    int width = 0;
    int height = 0;
    int bit_depth = 16;  // one of 8, 12, 16
    std::vector<std::uint16_t> pixels;

    ImageGrid() = default;
    ImageGrid(int w, int h, int depth)
        : width(w), height(h), bit_depth(depth),
          pixels(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}
    ImageGrid(int w, int h, int depth, std::vector<std::uint16_t> px)
        : width(w), height(h), bit_depth(depth), pixels(std::move(px)) {}

    std::uint16_t at(int row, int col) const {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint16_t& at(int row, int col) {
        return pixels[static_cast<std::size_t>(row) * width + col];
    }
    std::uint16_t max_value() const {
        return static_cast<std::uint16_t>((1u << bit_depth) - 1u);
    }
};

/// Same-shape grid of {0,1} bits marking a region (lung field, bone shadow).
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;

    BinaryMask() = default;
    BinaryMask(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h),
          bits(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), fill) {}

    std::uint8_t at(int row, int col) const {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
    std::uint8_t& at(int row, int col) {
        return bits[static_cast<std::size_t>(row) * width + col];
    }
};

/// Throws std::invalid_argument when an invariant is broken.
void validate(const ImageGrid& image);
void validate(const BinaryMask& mask);

enum class MaskCombine { Union, Intersection, Mean };

MaskCombine parse_mask_combine(const std::string& name);
std::string mask_combine_name(MaskCombine op);

/// Decodes a headerless raw buffer per the declared layout. Rejects size
/// mismatches and samples that do not fit the declared bit depth.
ImageGrid load_raw_image(std::span<const std::uint8_t> bytes, const RawLayout& layout);

/// Inverse of load_raw_image for the same layout; round-trips byte-identically.
std::vector<std::uint8_t> serialize_raw(const ImageGrid& image, const RawLayout& layout);

ImageGrid load_raw_file(const std::string& path, const RawLayout& layout);

/// bit = 1 iff pixel >= threshold.
BinaryMask load_mask(const ImageGrid& image, std::uint16_t threshold);

/// Keeps pixels under set bits, zeroes the rest. Dimensions must match.
ImageGrid apply_mask(const ImageGrid& image, const BinaryMask& mask);

/// Pointwise OR / AND, or majority vote (pixelwise average >= 0.5) for Mean.
BinaryMask combine_masks(const std::vector<BinaryMask>& masks, MaskCombine op);

/// count(bits == 1) / (width * height).
double mask_area_fraction(const BinaryMask& mask);

/// 1 / fraction, the dimensionality-reduction factor of a mask covering the
/// given area fraction. Requires 0 < fraction <= 1.
double reduction_factor(double fraction);

/// Integer box downscale: each output pixel is the rounded mean of its source
/// block. New dimensions must divide the old ones; upscaling is rejected.
ImageGrid resize_image(const ImageGrid& image, int new_w, int new_h);

/// Bit at column x, row y. Throws std::out_of_range outside the mask.
bool point_in_mask(const BinaryMask& mask, int x, int y);

}  // namespace cxr
