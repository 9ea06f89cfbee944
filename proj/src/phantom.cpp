#include "scaffscan/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace scaffscan {

namespace {

void validate(const PhantomSpec& s) {
    if (s.width <= 0 || s.height <= 0)
        throw std::invalid_argument("phantom dimensions must be positive");
    if (!(s.a > 0.0) || !(s.b > 0.0))
        throw std::invalid_argument("ellipse semi-axes must be positive");
    if (s.cx - s.a < 0.0 || s.cx + s.a > s.width - 1 || s.cy - s.b < 0.0 ||
        s.cy + s.b > s.height - 1)
        throw std::invalid_argument("ellipse extends outside the image bounds");
    if (!(s.scaffold_mean < s.background_mean))
        throw std::invalid_argument(
            "scaffold mean must be below the background mean (the implant is hypoechoic)");
    if (s.background_noise < 0.0 || s.scaffold_noise < 0.0)
        throw std::invalid_argument("noise scales must be >= 0");
    if (s.background_mean < 0.0 || s.background_mean > 255.0 || s.scaffold_mean < 0.0 ||
        s.scaffold_mean > 255.0)
        throw std::invalid_argument("mean gray levels must lie in [0, 255]");
}

}  // namespace

GeneratedPhantom generate_phantom(const PhantomSpec& spec) {
    validate(spec);

    // Speckle factor: a unit-sigma Rayleigh sample standardized to mean 1 and
    // standard deviation `scale`, applied multiplicatively. The uniform draw
    // is built from the raw 64-bit output so the stream is identical on every
    // platform (std::uniform_real_distribution is not portable).
    const double rayleigh_mean = std::sqrt(std::numbers::pi / 2.0);
    const double rayleigh_sd = std::sqrt((4.0 - std::numbers::pi) / 2.0);
    std::mt19937_64 rng(spec.seed);
    const auto next_factor = [&](double scale) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log1p(-u));
        return 1.0 + scale * (r - rayleigh_mean) / rayleigh_sd;
    };

    const int w = spec.width;
    const int h = spec.height;
    std::vector<std::uint8_t> pixels(static_cast<std::size_t>(w) * h);
    std::vector<std::uint8_t> mask(pixels.size());
    std::uint64_t area = 0;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const double ex = (x - spec.cx) / spec.a;
            const double ey = (y - spec.cy) / spec.b;
            const bool inside = ex * ex + ey * ey <= 1.0;
            const double mean = inside ? spec.scaffold_mean : spec.background_mean;
            const double scale = inside ? spec.scaffold_noise : spec.background_noise;
            const double gray = std::floor(mean * next_factor(scale) + 0.5);

            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            pixels[i] = static_cast<std::uint8_t>(std::clamp(gray, 0.0, 255.0));
            mask[i] = inside ? BinaryMask::black : BinaryMask::white;
            if (inside) ++area;
        }
    }

    GeneratedPhantom out;
    out.image = Grayscale8Image(w, h, std::move(pixels));
    out.truth = BinaryMask(w, h, std::move(mask));
    out.true_area = area;
    return out;
}

std::vector<GeneratedPhantom> generate_series(const DegradationSeries& series) {
    if (series.steps < 1)
        throw std::invalid_argument("degradation series needs at least one step");
    if (!(series.shrink_factor > 0.0) || series.shrink_factor > 1.0)
        throw std::invalid_argument("shrink factor must lie in (0, 1]");
    if (series.mean_schedule &&
        series.mean_schedule->size() != static_cast<std::size_t>(series.steps))
        throw std::invalid_argument("mean schedule must provide one value per step");

    std::vector<GeneratedPhantom> out;
    out.reserve(series.steps);
    for (int k = 0; k < series.steps; ++k) {
        PhantomSpec step = series.base;
        const double scale = std::pow(series.shrink_factor, k);
        step.a = series.base.a * scale;
        step.b = series.base.b * scale;
        if (step.a < 1.0 || step.b < 1.0)
            throw std::invalid_argument("ellipse degenerates below a 1-pixel semi-axis at step " +
                                        std::to_string(k));
        step.scaffold_mean = series.mean_schedule
                                 ? (*series.mean_schedule)[k]
                                 : series.base.scaffold_mean + k * series.mean_increment;
        out.push_back(generate_phantom(step));
    }
    return out;
}

}  // namespace scaffscan
