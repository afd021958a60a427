#include "cxr/pgm.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

namespace cxr::pgm {

namespace {

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
    throw std::runtime_error("pgm: " + path.string() + ": " + what);
}

// Skips whitespace and '#' comments, then reads one unsigned decimal token.
long read_header_int(std::istream& in) {
    for (;;) {
        int c = in.peek();
        if (c == '#') {
            std::string line;
            std::getline(in, line);
        } else if (std::isspace(c)) {
            in.get();
        } else {
            break;
        }
    }
    long value = -1;
    in >> value;
    return in ? value : -1;
}

}  // namespace

void write_image(const std::filesystem::path& path, const ImageGrid& image) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(path, "cannot open for writing");
    const unsigned maxval = image.max_value();
    out << "P5\n" << image.width << " " << image.height << "\n" << maxval << "\n";
    if (maxval <= 255) {
        for (std::uint16_t v : image.pixels) {
            out.put(static_cast<char>(v));
        }
    } else {
        for (std::uint16_t v : image.pixels) {
            out.put(static_cast<char>(v >> 8));
            out.put(static_cast<char>(v & 0xFF));
        }
    }
    if (!out) fail(path, "write failed");
}

ImageGrid read_image(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open");
    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (magic[0] != 'P' || magic[1] != '5') fail(path, "not a binary P5 file");
    const long width = read_header_int(in);
    const long height = read_header_int(in);
    const long maxval = read_header_int(in);
    if (width <= 0 || height <= 0) fail(path, "bad dimensions");
    if (maxval <= 0 || maxval > 65535) fail(path, "bad maxval");
    in.get();  // single whitespace separating header from samples

    int bit_depth = 16;
    if (maxval <= 255) bit_depth = 8;
    else if (maxval <= 4095) bit_depth = 12;

    ImageGrid image(static_cast<int>(width), static_cast<int>(height), bit_depth);
    const std::size_t count = image.pixels.size();
    if (maxval <= 255) {
        std::vector<std::uint8_t> buf(count);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(count));
        if (!in) fail(path, "truncated sample data");
        for (std::size_t i = 0; i < count; ++i) image.pixels[i] = buf[i];
    } else {
        std::vector<std::uint8_t> buf(count * 2);
        in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(count * 2));
        if (!in) fail(path, "truncated sample data");
        for (std::size_t i = 0; i < count; ++i) {
            image.pixels[i] = static_cast<std::uint16_t>(buf[2 * i] << 8 | buf[2 * i + 1]);
        }
    }
    for (std::uint16_t v : image.pixels) {
        if (v > maxval) fail(path, "sample " + std::to_string(v) + " exceeds maxval");
    }
    return image;
}

void write_mask(const std::filesystem::path& path, const BinaryMask& mask) {
    ImageGrid image(mask.width, mask.height, 8);
    for (std::size_t i = 0; i < mask.bits.size(); ++i) {
        image.pixels[i] = mask.bits[i] ? 255 : 0;
    }
    write_image(path, image);
}

BinaryMask read_mask(const std::filesystem::path& path, std::uint16_t threshold) {
    return load_mask(read_image(path), threshold);
}

}  // namespace cxr::pgm
