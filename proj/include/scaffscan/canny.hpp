#pragma once

#include <vector>

#include "scaffscan/image.hpp"

namespace scaffscan {

// Per-pixel gradient magnitude and direction (radians from atan2(gy, gx),
// y growing downward), row-major, same dimensions as the source image.
struct GradientField {
    int width = 0;
    int height = 0;
    std::vector<double> magnitude;
    std::vector<double> direction;

    double mag(int x, int y) const { return magnitude[static_cast<std::size_t>(y) * width + x]; }
    double dir(int x, int y) const { return direction[static_cast<std::size_t>(y) * width + x]; }
};

struct CannyParams {
    double low_threshold = 140.0;
    double high_threshold = 280.0;
    int gaussian_kernel = 5;
    double gaussian_sigma = 1.4;
    int sobel_aperture = 3;
    bool l2_gradient = true;
};

// Separable Gaussian convolution; weights normalized to sum 1, borders
// replicated, result rounded half-up per pixel.
Grayscale8Image gaussian_blur(const Grayscale8Image& image, int kernel, double sigma);

// Sobel derivative responses combined into magnitude (L2 by default, L1
// otherwise) and direction, with replicated borders. The aperture-n kernels
// are the binomial-smoothed central differences (n=3 gives the classic
// [-1 0 1] x [1 2 1] pair).
GradientField sobel_gradients(const Grayscale8Image& image, int aperture, bool l2 = true);

// Directions are quantized to four sectors (0, 45, 90, 135 degrees); a
// pixel's magnitude survives iff it is >= both neighbors along the quantized
// gradient direction (ties kept), and is zeroed otherwise. Out-of-bounds
// neighbors count as magnitude 0.
GradientField non_max_suppression(const GradientField& field);

// Magnitudes > high seed the edge set; pixels with low < magnitude <= high
// join iff 8-connected (transitively) to a seed. Edge pixels are 255 on a
// 0 background.
BinaryMask hysteresis(const GradientField& field, double low, double high);

// blur -> sobel -> non-maximum suppression -> hysteresis, with the outermost
// 1-pixel frame excluded to avoid replication artifacts at the borders.
BinaryMask canny(const Grayscale8Image& image, const CannyParams& params);

}  // namespace scaffscan
