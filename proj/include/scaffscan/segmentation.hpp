#pragma once

#include <array>
#include <cstdint>

#include "scaffscan/image.hpp"

namespace scaffscan {

struct Histogram256 {
    std::array<std::uint64_t, 256> bins{};
    std::uint64_t total = 0;
};

Histogram256 histogram(const Grayscale8Image& image);

// Result of the between-class variance sweep. threshold is the smallest k
// maximizing variance_curve[k], where the target class holds grays < k and
// the background class holds grays >= k.
struct OtsuResult {
    int threshold = 0;
    std::array<double, 256> variance_curve{};
    double w0 = 0.0;   // target-class probability at the chosen threshold
    double w1 = 0.0;   // background-class probability
    double mu0 = 0.0;  // target-class mean (0 when the class is empty)
    double mu1 = 0.0;  // background-class mean (0 when the class is empty)
    double mu = 0.0;   // global mean
};

// Throws std::invalid_argument when the histogram is empty (total == 0).
OtsuResult otsu_threshold(const Histogram256& hist);

// gray >= threshold -> white (255), gray < threshold -> black (0). The dark
// scaffold therefore comes out black on a white background.
BinaryMask apply_threshold(const Grayscale8Image& image, int threshold);

// Rectangular structuring element; both sides must be odd so the anchor is
// the center pixel.
struct MorphKernel {
    int width = 3;
    int height = 3;
};

// Morphology treats black (0) as foreground and white (255) as background;
// pixels outside the mask count as background.
BinaryMask erode(const BinaryMask& mask, const MorphKernel& kernel);
BinaryMask dilate(const BinaryMask& mask, const MorphKernel& kernel);
BinaryMask morphological_open(const BinaryMask& mask, const MorphKernel& kernel, int iterations);

// Number of black pixels, i.e. the segmented scaffold area.
std::uint64_t count_black(const BinaryMask& mask);

}  // namespace scaffscan
