#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace scaffscan {

struct FirstOrderStats {
    double mean = 0.0;
    double sd = 0.0;          // population standard deviation
    double cv_percent = 0.0;  // sd / mean * 100
    bool cv_valid = true;     // false when mean == 0 and cv is reported as 0
};

// sd / mean * 100; the caller guarantees mean > 0.
double coefficient_of_variation(double mean, double sd);

// Throws std::invalid_argument on an empty sequence.
FirstOrderStats first_order_stats(std::span<const std::uint8_t> roi_pixels);

// 256 gray levels down to 16: level = floor(gray / 16).
std::vector<std::uint8_t> quantize16(std::span<const std::uint8_t> roi_pixels);

// Gray-level co-occurrence matrix over 16 quantized levels. counts[m][n] is
// the number of ordered pixel pairs (p, p + offset(distance, angle)) whose
// levels are (m, n); probs is the normalized joint distribution. Angles are
// the four standard GLCM directions; with y growing downward the offsets are
// 0deg:(d,0), 45deg:(d,-d), 90deg:(0,-d), 135deg:(-d,-d).
struct Glcm16 {
    std::array<std::array<std::uint64_t, 16>, 16> counts{};
    std::array<std::array<double, 16>, 16> probs{};
    int distance = 1;
    int angle_deg = 0;
    std::uint64_t total = 0;  // number of accumulated pairs

    // False when the grid was too small to contain any pair at this offset;
    // features are undefined in that case.
    bool has_pairs() const { return total > 0; }
};

Glcm16 compute_glcm(std::span<const std::uint8_t> levels, int width, int height, int distance = 1,
                    int angle_deg = 0);

// Texture scalars: f1 contrast, f2 entropy, f3 energy, f4 inverse
// differential moment. Entropy is -sum P ln P (natural log, 0 ln 0 := 0).
struct SecondOrderStats {
    double contrast = 0.0;
    double entropy = 0.0;
    double energy = 0.0;
    double idm = 0.0;
};

// Throws std::invalid_argument when the GLCM holds no pairs.
SecondOrderStats glcm_features(const Glcm16& glcm);

struct SmoothingParams {
    int window = 11;   // odd
    int polyorder = 3; // < window
};

// Least-squares local polynomial smoothing. Interior points fit the centered
// window; near the ends the first/last full window is fitted and evaluated
// at the off-center position. Throws when the series is shorter than the
// window or the parameters are invalid.
std::vector<double> savitzky_golay(std::span<const double> series, const SmoothingParams& params);

struct DistributionCurve {
    std::array<double, 256> raw{};       // per-gray-level pixel counts
    std::array<double, 256> smoothed{};  // Savitzky-Golay smoothed counts
};

// 256-bin frequency histogram of the ROI plus its smoothed curve.
DistributionCurve pixel_distribution(std::span<const std::uint8_t> roi_pixels,
                                     const SmoothingParams& smoothing);

}  // namespace scaffscan
