#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "error.hpp"
#include "lattice.hpp"

namespace idcode {

/// Largest number of cells a rendering may cover.
inline constexpr std::int64_t kMaxRenderCells = 1'000'000;

/// Window of the given size placed so that the origin sits at its center (rounded down).
inline Box centered_window(std::int64_t width, std::int64_t height) {
    if (width < 1 || height < 1) throw PreconditionError("render window must be at least 1x1");
    if (width * height > kMaxRenderCells) {
        throw PreconditionError("render window " + std::to_string(width) + "x" + std::to_string(height) +
                                " exceeds the cap of " + std::to_string(kMaxRenderCells) + " cells");
    }
    const std::int64_t x0 = -(width / 2);
    const std::int64_t y0 = -(height / 2);
    return {x0, y0, x0 + width - 1, y0 + height - 1};
}

/// One character per vertex, top row first: 'o' for highlighted, '#' for filled, '.' otherwise.
inline std::string render_ascii(const Box& window, const PointSet& filled, const PointSet& highlighted) {
    std::string out;
    for (std::int64_t y = window.max_y; y >= window.min_y; --y) {
        for (std::int64_t x = window.min_x; x <= window.max_x; ++x) {
            const Point p{x, y};
            out += highlighted.contains(p) ? 'o' : filled.contains(p) ? '#' : '.';
        }
        out += '\n';
    }
    return out;
}

struct SvgCircles {
    Point center;
    SqRadius r2;
    SqRadius R2;
};

/// Static SVG: grid dots, filled code vertices, highlighted vertices and optional circles.
inline std::string render_svg(const Box& window, const PointSet& filled, const PointSet& highlighted,
                              const std::optional<SvgCircles>& circles = std::nullopt) {
    constexpr int kStep = 20;
    constexpr int kPad = 20;
    const std::int64_t w = (window.width() - 1) * kStep + 2 * kPad;
    const std::int64_t h = (window.height() - 1) * kStep + 2 * kPad;
    auto sx = [&](double x) { return kPad + (x - static_cast<double>(window.min_x)) * kStep; };
    auto sy = [&](double y) { return kPad + (static_cast<double>(window.max_y) - y) * kStep; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 "
        << w << ' ' << h << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (std::int64_t y = window.max_y; y >= window.min_y; --y) {
        for (std::int64_t x = window.min_x; x <= window.max_x; ++x) {
            const Point p{x, y};
            const double cx = sx(static_cast<double>(x));
            const double cy = sy(static_cast<double>(y));
            if (highlighted.contains(p)) {
                out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\" fill=\"#d62728\"/>\n";
            } else if (filled.contains(p)) {
                out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"6\" fill=\"black\"/>\n";
            } else {
                out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\" fill=\"#999999\"/>\n";
            }
        }
    }
    if (circles) {
        const double cx = sx(static_cast<double>(circles->center.x));
        const double cy = sy(static_cast<double>(circles->center.y));
        for (const SqRadius* r : {&circles->r2, &circles->R2}) {
            out << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << std::sqrt(r->value().to_double()) * kStep
                << "\" fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace idcode
