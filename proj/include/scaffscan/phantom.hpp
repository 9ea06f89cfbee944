#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "scaffscan/image.hpp"

namespace scaffscan {

// Synthetic ultrasound-like test image: a dark elliptical scaffold on a
// brighter background, both textured with multiplicative speckle noise.
struct PhantomSpec {
    int width = 0;
    int height = 0;
    double cx = 0.0;  // ellipse center
    double cy = 0.0;
    double a = 0.0;  // semi-axes, pixels
    double b = 0.0;
    double background_mean = 0.0;
    double background_noise = 0.0;  // multiplicative noise scale (sd of the factor)
    double scaffold_mean = 0.0;
    double scaffold_noise = 0.0;
    std::uint64_t seed = 0;
};

struct GeneratedPhantom {
    Grayscale8Image image;
    BinaryMask truth;  // ellipse interior black (0), exterior white (255)
    std::uint64_t true_area = 0;
};

// Fully determined by the spec (including the seed); identical calls yield
// bit-identical images. Throws on an out-of-bounds ellipse or a scaffold
// mean that is not darker than the background.
GeneratedPhantom generate_phantom(const PhantomSpec& spec);

// Longitudinal degradation model: step k shrinks both semi-axes by
// shrink_factor^k and moves the scaffold mean, mimicking an implant that
// loses area while its echogenicity drifts.
struct DegradationSeries {
    PhantomSpec base;
    int steps = 1;
    double shrink_factor = 1.0;          // in (0, 1]
    double mean_increment = 0.0;         // scaffold mean += k * increment
    // When set, overrides the increment with an explicit per-step scaffold
    // mean (size must equal steps), allowing non-monotonic brightness paths.
    std::optional<std::vector<double>> mean_schedule;
};

// Every step reuses the base spec (same seed included) with only the axes
// and scaffold mean adjusted. Throws when a step's ellipse degenerates below
// a 1-pixel semi-axis.
std::vector<GeneratedPhantom> generate_series(const DegradationSeries& series);

}  // namespace scaffscan
