#include "sfc/image.hpp"

#include <cmath>
#include <istream>
#include <limits>
#include <ostream>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

void check_dims(const char* op, const GrayImage& image, const CurveMap& map) {
    if (image.width != map.width || image.height != map.height) {
        throw domain_error(std::string(op) + ": image is " + std::to_string(image.width) +
                           "x" + std::to_string(image.height) + " but the map covers " +
                           std::to_string(map.width) + "x" + std::to_string(map.height));
    }
}

int quantize255(double v) {
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return static_cast<int>(std::lround(v * 255.0));
}

// Next header token, skipping whitespace and '#' comment lines.
int next_header_char(std::istream& is) {
    int c = is.get();
    while (c != EOF) {
        if (c == '#') {
            while (c != EOF && c != '\n') c = is.get();
        } else if (!std::isspace(c)) {
            return c;
        }
        c = is.get();
    }
    return EOF;
}

std::uint64_t read_header_uint(std::istream& is, const char* what) {
    int c = next_header_char(is);
    if (c == EOF || !std::isdigit(c)) {
        throw domain_error(std::string("read_pgm: missing ") + what + " in header");
    }
    std::uint64_t v = 0;
    while (c != EOF && std::isdigit(c)) {
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > std::numeric_limits<std::uint32_t>::max()) {
            throw domain_error(std::string("read_pgm: ") + what + " too large");
        }
        c = is.get();
    }
    if (c != EOF) is.unget();
    return v;
}

} // namespace

GrayImage GrayImage::filled(std::uint32_t w, std::uint32_t h, double value) {
    GrayImage img;
    img.width = w;
    img.height = h;
    img.pixels.assign(std::size_t{w} * h, value);
    return img;
}

std::vector<double> flatten(const GrayImage& image, const CurveMap& map) {
    check_dims("flatten", image, map);
    std::vector<double> out;
    out.reserve(map.size());
    for (std::uint64_t d = 0; d < map.size(); ++d) {
        const GridPoint p = map.forward[d];
        out.push_back(image.at(p.x, p.y));
    }
    return out;
}

GrayImage fold(std::span<const double> sequence, const CurveMap& map) {
    if (sequence.size() != map.size()) {
        throw domain_error("fold: sequence length " + std::to_string(sequence.size()) +
                           " does not match map size " + std::to_string(map.size()));
    }
    GrayImage img = GrayImage::filled(map.width, map.height);
    for (std::uint64_t d = 0; d < map.size(); ++d) {
        const GridPoint p = map.forward[d];
        img.at(p.x, p.y) = sequence[d];
    }
    return img;
}

GrayImage read_pgm(std::istream& is) {
    const int m0 = is.get();
    const int m1 = is.get();
    if (m0 != 'P' || (m1 != '2' && m1 != '5')) {
        throw domain_error("read_pgm: not a P2/P5 PGM stream");
    }
    const bool binary = m1 == '5';
    const auto width = static_cast<std::uint32_t>(read_header_uint(is, "width"));
    const auto height = static_cast<std::uint32_t>(read_header_uint(is, "height"));
    const auto maxval = read_header_uint(is, "maxval");
    if (width < 1 || height < 1) {
        throw domain_error("read_pgm: dimensions must be >= 1");
    }
    if (maxval < 1 || maxval > 255) {
        throw domain_error("read_pgm: maxval " + std::to_string(maxval) +
                           " unsupported (expected 1..255)");
    }

    GrayImage img = GrayImage::filled(width, height);
    const std::size_t n = img.pixels.size();
    if (binary) {
        const int sep = is.get(); // single whitespace byte after maxval
        if (sep == EOF) throw domain_error("read_pgm: truncated header");
        std::vector<unsigned char> raw(n);
        is.read(reinterpret_cast<char*>(raw.data()), static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(is.gcount()) != n) {
            throw domain_error("read_pgm: truncated pixel data");
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (raw[i] > maxval) {
                throw domain_error("read_pgm: pixel value exceeds maxval");
            }
            img.pixels[i] = static_cast<double>(raw[i]) / static_cast<double>(maxval);
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            const std::uint64_t v = read_header_uint(is, "pixel");
            if (v > maxval) {
                throw domain_error("read_pgm: pixel value exceeds maxval");
            }
            img.pixels[i] = static_cast<double>(v) / static_cast<double>(maxval);
        }
    }
    return img;
}

void write_pgm_p5(const GrayImage& image, std::ostream& os) {
    os << "P5\n" << image.width << ' ' << image.height << "\n255\n";
    for (const double v : image.pixels) {
        os.put(static_cast<char>(quantize255(v)));
    }
}

void write_pgm_p2(const GrayImage& image, std::ostream& os) {
    os << "P2\n" << image.width << ' ' << image.height << "\n255\n";
    for (std::uint32_t y = 0; y < image.height; ++y) {
        for (std::uint32_t x = 0; x < image.width; ++x) {
            os << quantize255(image.at(x, y));
            os << (x + 1 == image.width ? '\n' : ' ');
        }
    }
}

} // namespace sfc
