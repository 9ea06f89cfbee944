#include "scaffscan/mean_shift.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace scaffscan {

namespace {

void validate(const MeanShiftParams& p) {
    if (p.spatial_radius < 1)
        throw std::invalid_argument("mean-shift spatial radius must be >= 1");
    if (p.range_radius < 0)
        throw std::invalid_argument("mean-shift range radius must be >= 0");
    if (p.max_iterations < 1)
        throw std::invalid_argument("mean-shift max iterations must be >= 1");
    if (!(p.epsilon >= 0.0))
        throw std::invalid_argument("mean-shift epsilon must be >= 0");
}

}  // namespace

Grayscale8Image mean_shift_filter(const Grayscale8Image& image, const MeanShiftParams& params,
                                  MeanShiftStats* stats) {
    validate(params);

    const int w = image.width();
    const int h = image.height();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h);
    int worst_iterations = 0;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double cx = x;
            double cy = y;
            double cg = image(x, y);
            int used = 0;

            for (int iter = 0; iter < params.max_iterations; ++iter) {
                // Window is recentered on the nearest pixel to the current
                // spatial mean, so the mode search can drift across the image.
                const int px = static_cast<int>(std::lround(cx));
                const int py = static_cast<int>(std::lround(cy));
                const int x0 = std::max(0, px - params.spatial_radius);
                const int x1 = std::min(w - 1, px + params.spatial_radius);
                const int y0 = std::max(0, py - params.spatial_radius);
                const int y1 = std::min(h - 1, py + params.spatial_radius);

                double sx = 0.0, sy = 0.0, sg = 0.0;
                long count = 0;
                for (int ny = y0; ny <= y1; ++ny) {
                    for (int nx = x0; nx <= x1; ++nx) {
                        const int g = image(nx, ny);
                        if (std::abs(g - cg) <= params.range_radius) {
                            sx += nx;
                            sy += ny;
                            sg += g;
                            ++count;
                        }
                    }
                }
                if (count == 0)
                    break;  // no admissible neighbors; the point is its own mode

                const double mx = sx / count;
                const double my = sy / count;
                const double mg = sg / count;
                const double dx = mx - cx;
                const double dy = my - cy;
                const double dg = mg - cg;
                cx = mx;
                cy = my;
                cg = mg;
                ++used;
                if (std::sqrt(dx * dx + dy * dy + dg * dg) <= params.epsilon)
                    break;
            }

            worst_iterations = std::max(worst_iterations, used);
            const double rounded = std::floor(cg + 0.5);
            out[static_cast<std::size_t>(y) * w + x] =
                static_cast<std::uint8_t>(std::clamp(rounded, 0.0, 255.0));
        }
    }

    if (stats)
        stats->max_iterations_used = worst_iterations;
    return Grayscale8Image(w, h, std::move(out));
}

}  // namespace scaffscan
