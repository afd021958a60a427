#include "cxr/image.hpp"

#include <fstream>
#include <stdexcept>

namespace cxr {

namespace {

std::size_t expected_count(int width, int height) {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

void validate(const ImageGrid& image) {
    require(image.width > 0 && image.height > 0, "image dimensions must be positive");
    require(image.bit_depth == 8 || image.bit_depth == 12 || image.bit_depth == 16,
            "bit depth must be 8, 12, or 16");
    require(image.pixels.size() == expected_count(image.width, image.height),
            "pixel count does not match dimensions");
    const std::uint32_t limit = 1u << image.bit_depth;
    for (std::uint16_t v : image.pixels) {
        require(v < limit, "pixel value " + std::to_string(v) + " exceeds " +
                               std::to_string(image.bit_depth) + "-bit depth");
    }
}

void validate(const BinaryMask& mask) {
    require(mask.width > 0 && mask.height > 0, "mask dimensions must be positive");
    require(mask.bits.size() == expected_count(mask.width, mask.height),
            "bit count does not match dimensions");
    for (std::uint8_t b : mask.bits) {
        require(b == 0 || b == 1, "mask bits must be 0 or 1");
    }
}

MaskCombine parse_mask_combine(const std::string& name) {
    if (name == "union") return MaskCombine::Union;
    if (name == "intersection") return MaskCombine::Intersection;
    if (name == "mean") return MaskCombine::Mean;
    throw std::invalid_argument("unknown mask combine op: " + name);
}

std::string mask_combine_name(MaskCombine op) {
    switch (op) {
        case MaskCombine::Union: return "union";
        case MaskCombine::Intersection: return "intersection";
        case MaskCombine::Mean: return "mean";
    }
    return "unknown";
}

ImageGrid load_raw_image(std::span<const std::uint8_t> bytes, const RawLayout& layout) {
    const std::size_t count = expected_count(layout.width, layout.height);
    require(layout.width > 0 && layout.height > 0, "layout dimensions must be positive");
    if (bytes.size() != count * 2) {
        throw std::invalid_argument("raw size mismatch: got " + std::to_string(bytes.size()) +
                                    " bytes, layout declares " + std::to_string(count * 2));
    }
    ImageGrid image(layout.width, layout.height, layout.bit_depth);
    const std::uint32_t limit = 1u << layout.bit_depth;
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint8_t hi = bytes[2 * i];
        const std::uint8_t lo = bytes[2 * i + 1];
        const std::uint16_t value = layout.byte_order == ByteOrder::big_endian
                                        ? static_cast<std::uint16_t>(hi << 8 | lo)
                                        : static_cast<std::uint16_t>(lo << 8 | hi);
        if (value >= limit) {
            throw std::invalid_argument("sample " + std::to_string(value) + " at offset " +
                                        std::to_string(2 * i) + " exceeds declared " +
                                        std::to_string(layout.bit_depth) + "-bit depth");
        }
        image.pixels[i] = value;
    }
    return image;
}

std::vector<std::uint8_t> serialize_raw(const ImageGrid& image, const RawLayout& layout) {
    require(image.width == layout.width && image.height == layout.height,
            "layout dimensions do not match image");
    require(image.bit_depth == layout.bit_depth, "layout bit depth does not match image");
    std::vector<std::uint8_t> bytes(image.pixels.size() * 2);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        const std::uint16_t v = image.pixels[i];
        if (layout.byte_order == ByteOrder::big_endian) {
            bytes[2 * i] = static_cast<std::uint8_t>(v >> 8);
            bytes[2 * i + 1] = static_cast<std::uint8_t>(v & 0xFF);
        } else {
            bytes[2 * i] = static_cast<std::uint8_t>(v & 0xFF);
            bytes[2 * i + 1] = static_cast<std::uint8_t>(v >> 8);
        }
    }
    return bytes;
}

ImageGrid load_raw_file(const std::string& path, const RawLayout& layout) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open raw file: " + path);
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    return load_raw_image(bytes, layout);
}

BinaryMask load_mask(const ImageGrid& image, std::uint16_t threshold) {
    BinaryMask mask(image.width, image.height);
    for (std::size_t i = 0; i < image.pixels.size(); ++i) {
        mask.bits[i] = image.pixels[i] >= threshold ? 1 : 0;
    }
    return mask;
}

ImageGrid apply_mask(const ImageGrid& image, const BinaryMask& mask) {
    require(image.width == mask.width && image.height == mask.height,
            "mask dimensions do not match image");
    ImageGrid out = image;
    for (std::size_t i = 0; i < out.pixels.size(); ++i) {
        if (!mask.bits[i]) out.pixels[i] = 0;
    }
    return out;
}

BinaryMask combine_masks(const std::vector<BinaryMask>& masks, MaskCombine op) {
    require(!masks.empty(), "combine_masks requires a non-empty list");
    const int w = masks.front().width;
    const int h = masks.front().height;
    for (const BinaryMask& m : masks) {
        require(m.width == w && m.height == h, "combine_masks dimension mismatch");
    }
    BinaryMask out(w, h);
    const std::size_t count = out.bits.size();
    switch (op) {
        case MaskCombine::Union:
            for (std::size_t i = 0; i < count; ++i) {
                std::uint8_t acc = 0;
                for (const BinaryMask& m : masks) acc |= m.bits[i];
                out.bits[i] = acc;
            }
            break;
        case MaskCombine::Intersection:
            for (std::size_t i = 0; i < count; ++i) {
                std::uint8_t acc = 1;
                for (const BinaryMask& m : masks) acc &= m.bits[i];
                out.bits[i] = acc;
            }
            break;
        case MaskCombine::Mean:
            // Majority vote: average >= 0.5, i.e. 2 * set_count >= n.
            for (std::size_t i = 0; i < count; ++i) {
                std::size_t set = 0;
                for (const BinaryMask& m : masks) set += m.bits[i];
                out.bits[i] = 2 * set >= masks.size() ? 1 : 0;
            }
            break;
    }
    return out;
}

double mask_area_fraction(const BinaryMask& mask) {
    std::size_t set = 0;
    for (std::uint8_t b : mask.bits) set += b;
    return static_cast<double>(set) / static_cast<double>(mask.bits.size());
}

double reduction_factor(double fraction) {
    require(fraction > 0.0 && fraction <= 1.0, "area fraction must be in (0, 1]");
    return 1.0 / fraction;
}

ImageGrid resize_image(const ImageGrid& image, int new_w, int new_h) {
    require(new_w > 0 && new_h > 0, "target dimensions must be positive");
    require(new_w <= image.width && new_h <= image.height, "upscaling is not supported");
    require(image.width % new_w == 0 && image.height % new_h == 0,
            "target dimensions must divide source dimensions");
    const int bw = image.width / new_w;
    const int bh = image.height / new_h;
    const std::uint64_t block = static_cast<std::uint64_t>(bw) * bh;
    ImageGrid out(new_w, new_h, image.bit_depth);
    for (int r = 0; r < new_h; ++r) {
        for (int c = 0; c < new_w; ++c) {
            std::uint64_t sum = 0;
            for (int dr = 0; dr < bh; ++dr) {
                for (int dc = 0; dc < bw; ++dc) {
                    sum += image.at(r * bh + dr, c * bw + dc);
                }
            }
            // Integer round-half-up of sum / block.
            out.at(r, c) = static_cast<std::uint16_t>((2 * sum + block) / (2 * block));
        }
    }
    return out;
}

bool point_in_mask(const BinaryMask& mask, int x, int y) {
    if (x < 0 || x >= mask.width || y < 0 || y >= mask.height) {
        throw std::out_of_range("point (" + std::to_string(x) + "," + std::to_string(y) +
                                ") outside mask " + std::to_string(mask.width) + "x" +
                                std::to_string(mask.height));
    }
    return mask.at(y, x) == 1;
}

}  // namespace cxr
