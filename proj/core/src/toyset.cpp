#include "sfc/toyset.hpp"

#include <cmath>

#include "sfc/errors.hpp"

namespace sfc {
namespace {

void check_spec(const ShapeSpec& spec) {
    if (spec.resolution != 32 && spec.resolution != 64 && spec.resolution != 128) {
        throw domain_error("generate_shape: resolution " + std::to_string(spec.resolution) +
                           " not in {32, 64, 128}");
    }
}

double extent_fraction(ShapeScale scale) {
    return scale == ShapeScale::Large ? 0.8 : 0.3;
}

GrayImage rasterize_circle(std::uint32_t res, double radius) {
    GrayImage img = GrayImage::filled(res, res);
    const double c = res / 2.0;
    const double r2 = radius * radius;
    for (std::uint32_t y = 0; y < res; ++y) {
        for (std::uint32_t x = 0; x < res; ++x) {
            const double dx = x + 0.5 - c;
            const double dy = y + 0.5 - c;
            if (dx * dx + dy * dy <= r2) img.at(x, y) = 1.0;
        }
    }
    return img;
}

GrayImage rasterize_square(std::uint32_t res, std::uint32_t side) {
    GrayImage img = GrayImage::filled(res, res);
    const std::uint32_t lo = (res - side) / 2;
    for (std::uint32_t y = lo; y < lo + side; ++y) {
        for (std::uint32_t x = lo; x < lo + side; ++x) {
            img.at(x, y) = 1.0;
        }
    }
    return img;
}

GrayImage rasterize_triangle(std::uint32_t res, std::uint32_t side) {
    // Apex at the top-center of the extent box, base along its bottom edge.
    // Doubled integer coordinates keep the inclusive point-in-triangle test
    // exact: pixel centers are (2x+1, 2y+1).
    GrayImage img = GrayImage::filled(res, res);
    const std::int64_t lo = (res - side) / 2;
    const std::int64_t ax = 2 * lo + side, ay = 2 * lo;
    const std::int64_t bx = 2 * lo, by = 2 * (lo + side);
    const std::int64_t cx = 2 * (lo + side), cy = by;
    for (std::uint32_t y = 0; y < res; ++y) {
        for (std::uint32_t x = 0; x < res; ++x) {
            const std::int64_t px = 2 * std::int64_t{x} + 1;
            const std::int64_t py = 2 * std::int64_t{y} + 1;
            const std::int64_t e1 = (bx - ax) * (py - ay) - (by - ay) * (px - ax);
            const std::int64_t e2 = (cx - bx) * (py - by) - (cy - by) * (px - bx);
            const std::int64_t e3 = (ax - cx) * (py - cy) - (ay - cy) * (px - cx);
            const bool has_neg = e1 < 0 || e2 < 0 || e3 < 0;
            const bool has_pos = e1 > 0 || e2 > 0 || e3 > 0;
            if (!(has_neg && has_pos)) img.at(x, y) = 1.0;
        }
    }
    return img;
}

} // namespace

const char* to_string(Shape shape) {
    switch (shape) {
        case Shape::Circle: return "circle";
        case Shape::Square: return "square";
        case Shape::Triangle: return "triangle";
    }
    return "?";
}

const char* to_string(ShapeScale scale) {
    return scale == ShapeScale::Large ? "L" : "S";
}

std::string scale_label(const ShapeSpec& spec) {
    return std::string(to_string(spec.scale)) + std::to_string(spec.resolution);
}

std::string shape_file_name(const ShapeSpec& spec) {
    return std::string(to_string(spec.shape)) + "_" + scale_label(spec) + ".pgm";
}

GrayImage generate_shape(const ShapeSpec& spec) {
    check_spec(spec);
    const double extent = extent_fraction(spec.scale) * spec.resolution;
    switch (spec.shape) {
        case Shape::Circle:
            return rasterize_circle(spec.resolution, extent / 2.0);
        case Shape::Square:
            return rasterize_square(spec.resolution,
                                    static_cast<std::uint32_t>(std::lround(extent)));
        case Shape::Triangle:
            return rasterize_triangle(spec.resolution,
                                      static_cast<std::uint32_t>(std::lround(extent)));
    }
    throw internal_error("generate_shape: unhandled shape");
}

std::vector<ShapeSpec> toy_dataset() {
    std::vector<ShapeSpec> specs;
    specs.reserve(18);
    for (const Shape shape : {Shape::Circle, Shape::Square, Shape::Triangle}) {
        for (const ShapeScale scale : {ShapeScale::Large, ShapeScale::Small}) {
            for (const std::uint32_t res : {32u, 64u, 128u}) {
                specs.push_back({shape, scale, res});
            }
        }
    }
    return specs;
}

} // namespace sfc
