#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "sfc/curve_map.hpp"

namespace sfc {

/// W x H raster of intensities in [0,1], row-major.
struct GrayImage {
    std::uint32_t width = 0;
    std::uint32_t height = 0;
    std::vector<double> pixels;

    static GrayImage filled(std::uint32_t w, std::uint32_t h, double value = 0.0);

    double at(std::uint32_t x, std::uint32_t y) const {
        return pixels[std::size_t{y} * width + x];
    }
    double& at(std::uint32_t x, std::uint32_t y) {
        return pixels[std::size_t{y} * width + x];
    }

    friend bool operator==(const GrayImage&, const GrayImage&) = default;
};

/// out[d] = image[map.forward[d]].
std::vector<double> flatten(const GrayImage& image, const CurveMap& map);

/// Exact inverse of flatten: fold(flatten(img, m), m) == img.
GrayImage fold(std::span<const double> sequence, const CurveMap& map);

/// Reads P2 (ASCII) or P5 (binary) PGM with maxval <= 255; intensities are
/// scaled to [0,1].
GrayImage read_pgm(std::istream& is);

/// Binary PGM, maxval 255, pixel = round(255 * v) with v clamped to [0,1].
void write_pgm_p5(const GrayImage& image, std::ostream& os);

/// ASCII PGM, maxval 255, same quantization as write_pgm_p5.
void write_pgm_p2(const GrayImage& image, std::ostream& os);

} // namespace sfc
