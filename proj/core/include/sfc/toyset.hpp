#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sfc/image.hpp"

namespace sfc {

enum class Shape { Circle, Square, Triangle };
enum class ShapeScale { Large, Small };

/// One of the 18 synthetic test images: a shape at one of two object scales
/// rendered at one of three resolutions.
struct ShapeSpec {
    Shape shape = Shape::Circle;
    ShapeScale scale = ShapeScale::Large;
    std::uint32_t resolution = 32; // 32, 64 or 128

    friend bool operator==(const ShapeSpec&, const ShapeSpec&) = default;
};

const char* to_string(Shape shape);
const char* to_string(ShapeScale scale);

/// Short label, e.g. "L32" or "S128".
std::string scale_label(const ShapeSpec& spec);

/// File name for the dataset export, e.g. "circle_L32.pgm".
std::string shape_file_name(const ShapeSpec& spec);

/// Deterministic binary rasterization (values {0,1}, foreground 1), shape
/// centered at (res/2, res/2). The large scale spans 0.8*res, the small
/// 0.3*res. Squares and triangles use a side of round(extent*res) pixels;
/// the triangle points up and is inscribed in that box; circles test pixel
/// centers against the exact radius.
GrayImage generate_shape(const ShapeSpec& spec);

/// All 18 specs: shapes x {Large, Small} x {32, 64, 128}, fixed order.
std::vector<ShapeSpec> toy_dataset();

} // namespace sfc
