#include "scaffscan/canny.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <deque>
#include <numbers>
#include <stdexcept>
#include <string>

namespace scaffscan {

namespace {

void require_odd(int size, int minimum, const char* what) {
    if (size < minimum || size % 2 == 0)
        throw std::invalid_argument(std::string(what) + " must be odd and >= " +
                                    std::to_string(minimum) + ", got " + std::to_string(size));
}

int clamp_index(int i, int n) { return std::clamp(i, 0, n - 1); }

// Row of Pascal's triangle with n entries: the binomial smoothing kernel.
std::vector<double> pascal_row(int n) {
    std::vector<double> row(n, 1.0);
    for (int i = 1; i < n; ++i)
        for (int j = i - 1; j > 0; --j) row[j] += row[j - 1];
    return row;
}

// Separable correlation along one axis with replicated borders.
// Horizontal: pass dx=1, dy=0. Vertical: dx=0, dy=1.
std::vector<double> correlate_1d(const std::vector<double>& in, int w, int h,
                                 const std::vector<double>& kernel, int dx, int dy) {
    const int r = static_cast<int>(kernel.size()) / 2;
    std::vector<double> out(in.size());
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            double acc = 0.0;
            for (int k = -r; k <= r; ++k) {
                const int nx = clamp_index(x + k * dx, w);
                const int ny = clamp_index(y + k * dy, h);
                acc += kernel[k + r] * in[static_cast<std::size_t>(ny) * w + nx];
            }
            out[static_cast<std::size_t>(y) * w + x] = acc;
        }
    }
    return out;
}

std::vector<double> to_doubles(const Grayscale8Image& image) {
    return std::vector<double>(image.pixels().begin(), image.pixels().end());
}

}  // namespace

Grayscale8Image gaussian_blur(const Grayscale8Image& image, int kernel, double sigma) {
    require_odd(kernel, 1, "gaussian kernel size");
    if (!(sigma > 0.0))
        throw std::invalid_argument("gaussian sigma must be > 0");

    const int r = kernel / 2;
    std::vector<double> weights(kernel);
    double sum = 0.0;
    for (int i = 0; i < kernel; ++i) {
        const double d = i - r;
        weights[i] = std::exp(-(d * d) / (2.0 * sigma * sigma));
        sum += weights[i];
    }
    for (double& w : weights) w /= sum;

    const int w = image.width();
    const int h = image.height();
    std::vector<double> tmp = correlate_1d(to_doubles(image), w, h, weights, 1, 0);
    std::vector<double> blurred = correlate_1d(tmp, w, h, weights, 0, 1);

    std::vector<std::uint8_t> out(blurred.size());
    for (std::size_t i = 0; i < blurred.size(); ++i)
        out[i] = static_cast<std::uint8_t>(std::clamp(std::floor(blurred[i] + 0.5), 0.0, 255.0));
    return Grayscale8Image(w, h, std::move(out));
}

GradientField sobel_gradients(const Grayscale8Image& image, int aperture, bool l2) {
    require_odd(aperture, 3, "sobel aperture");

    // Derivative kernel = central difference smoothed by a binomial row, so
    // aperture 3 yields [-1 0 1] and aperture 5 yields [-1 -2 0 2 1].
    const std::vector<double> smooth = pascal_row(aperture);
    std::vector<double> deriv(aperture, 0.0);
    {
        const std::vector<double> base = pascal_row(aperture - 2);
        for (int i = 0; i < aperture - 2; ++i) {
            deriv[i] -= base[i];      // correlation with [-1, 0, +1]
            deriv[i + 2] += base[i];
        }
    }

    const int w = image.width();
    const int h = image.height();
    const std::vector<double> src = to_doubles(image);
    const std::vector<double> gx =
        correlate_1d(correlate_1d(src, w, h, deriv, 1, 0), w, h, smooth, 0, 1);
    const std::vector<double> gy =
        correlate_1d(correlate_1d(src, w, h, smooth, 1, 0), w, h, deriv, 0, 1);

    GradientField field;
    field.width = w;
    field.height = h;
    field.magnitude.resize(src.size());
    field.direction.resize(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        field.magnitude[i] =
            l2 ? std::hypot(gx[i], gy[i]) : std::abs(gx[i]) + std::abs(gy[i]);
        field.direction[i] = std::atan2(gy[i], gx[i]);
    }
    return field;
}

GradientField non_max_suppression(const GradientField& field) {
    // Sector -> unit step along the gradient direction in raster coordinates
    // (y down): 0 deg = E/W, 45 deg = SE/NW, 90 deg = S/N, 135 deg = SW/NE.
    static constexpr int step_x[4] = {1, 1, 0, -1};
    static constexpr int step_y[4] = {0, 1, 1, 1};

    const int w = field.width;
    const int h = field.height;
    GradientField out = field;

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const std::size_t i = static_cast<std::size_t>(y) * w + x;
            double deg = field.direction[i] * 180.0 / std::numbers::pi;
            if (deg < 0.0) deg += 180.0;
            if (deg >= 180.0) deg -= 180.0;
            const int sector = static_cast<int>((deg + 22.5) / 45.0) % 4;

            const auto neighbor = [&](int sign) {
                const int nx = x + sign * step_x[sector];
                const int ny = y + sign * step_y[sector];
                return (nx >= 0 && nx < w && ny >= 0 && ny < h)
                           ? field.magnitude[static_cast<std::size_t>(ny) * w + nx]
                           : 0.0;
            };
            const double m = field.magnitude[i];
            if (m < neighbor(+1) || m < neighbor(-1)) out.magnitude[i] = 0.0;
        }
    }
    return out;
}

BinaryMask hysteresis(const GradientField& field, double low, double high) {
    if (low > high)
        throw std::invalid_argument("hysteresis low threshold must be <= high threshold");

    const int w = field.width;
    const int h = field.height;
    std::vector<std::uint8_t> edges(static_cast<std::size_t>(w) * h, 0);
    std::deque<std::pair<int, int>> frontier;

    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            if (field.mag(x, y) > high) {
                edges[static_cast<std::size_t>(y) * w + x] = 255;
                frontier.emplace_back(x, y);
            }

    while (!frontier.empty()) {
        const auto [x, y] = frontier.front();
        frontier.pop_front();
        for (int dy = -1; dy <= 1; ++dy) {
            for (int dx = -1; dx <= 1; ++dx) {
                const int nx = x + dx;
                const int ny = y + dy;
                if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
                const std::size_t i = static_cast<std::size_t>(ny) * w + nx;
                if (edges[i] == 0 && field.magnitude[i] > low) {
                    edges[i] = 255;
                    frontier.emplace_back(nx, ny);
                }
            }
        }
    }
    return BinaryMask(w, h, std::move(edges));
}

BinaryMask canny(const Grayscale8Image& image, const CannyParams& params) {
    if (params.low_threshold < 0.0 || params.low_threshold > params.high_threshold)
        throw std::invalid_argument("canny thresholds must satisfy 0 <= low <= high");
    require_odd(params.gaussian_kernel, 3, "gaussian kernel size");
    require_odd(params.sobel_aperture, 3, "sobel aperture");
    if (!(params.gaussian_sigma > 0.0))
        throw std::invalid_argument("gaussian sigma must be > 0");

    const Grayscale8Image blurred =
        gaussian_blur(image, params.gaussian_kernel, params.gaussian_sigma);
    GradientField field =
        non_max_suppression(sobel_gradients(blurred, params.sobel_aperture, params.l2_gradient));

    // Replicated borders make the outermost ring's gradients unreliable;
    // keep it out of the edge set entirely.
    const int w = field.width;
    const int h = field.height;
    for (int x = 0; x < w; ++x) {
        field.magnitude[x] = 0.0;
        field.magnitude[static_cast<std::size_t>(h - 1) * w + x] = 0.0;
    }
    for (int y = 0; y < h; ++y) {
        field.magnitude[static_cast<std::size_t>(y) * w] = 0.0;
        field.magnitude[static_cast<std::size_t>(y) * w + (w - 1)] = 0.0;
    }
    return hysteresis(field, params.low_threshold, params.high_threshold);
}

}  // namespace scaffscan
