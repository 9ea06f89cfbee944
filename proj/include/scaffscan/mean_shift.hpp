#pragma once

#include "scaffscan/image.hpp"

namespace scaffscan {

// Spatial-range mean-shift filtering parameters. The spatial window is a
// square (Chebyshev ball) of half-width spatial_radius; a neighbor enters the
// mean when its gray value differs from the current gray estimate by at most
// range_radius. The kernel is flat (unweighted mean).
struct MeanShiftParams {
    int spatial_radius = 5;
    int range_radius = 100;
    int max_iterations = 5;
    double epsilon = 1.0;  // convergence tolerance on joint (x, y, gray) displacement
};

struct MeanShiftStats {
    int max_iterations_used = 0;
};

// Mode-seeking smoother: each pixel's joint (column, row, gray) point is
// iteratively replaced by the flat-kernel mean of the admitted neighbors
// until the Euclidean displacement in joint space is <= epsilon or
// max_iterations is reached. The output pixel is the converged mean gray,
// rounded half-up. The input image is untouched.
Grayscale8Image mean_shift_filter(const Grayscale8Image& image, const MeanShiftParams& params,
                                  MeanShiftStats* stats = nullptr);

}  // namespace scaffscan
