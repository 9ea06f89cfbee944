#include "scaffscan/texture.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace scaffscan {

double coefficient_of_variation(double mean, double sd) { return sd / mean * 100.0; }

FirstOrderStats first_order_stats(std::span<const std::uint8_t> roi_pixels) {
    if (roi_pixels.empty())
        throw std::invalid_argument("cannot compute statistics of an empty ROI");

    const double n = static_cast<double>(roi_pixels.size());
    double sum = 0.0;
    for (std::uint8_t v : roi_pixels) sum += v;
    const double mean = sum / n;

    double sq = 0.0;
    for (std::uint8_t v : roi_pixels) {
        const double d = v - mean;
        sq += d * d;
    }

    FirstOrderStats stats;
    stats.mean = mean;
    stats.sd = std::sqrt(sq / n);
    if (mean > 0.0) {
        stats.cv_percent = coefficient_of_variation(mean, stats.sd);
    } else {
        stats.cv_percent = 0.0;
        stats.cv_valid = false;
    }
    return stats;
}

std::vector<std::uint8_t> quantize16(std::span<const std::uint8_t> roi_pixels) {
    std::vector<std::uint8_t> levels(roi_pixels.size());
    for (std::size_t i = 0; i < roi_pixels.size(); ++i)
        levels[i] = static_cast<std::uint8_t>(roi_pixels[i] / 16);
    return levels;
}

Glcm16 compute_glcm(std::span<const std::uint8_t> levels, int width, int height, int distance,
                    int angle_deg) {
    if (width <= 0 || height <= 0 ||
        levels.size() != static_cast<std::size_t>(width) * height)
        throw std::invalid_argument("level grid dimensions do not match the data");
    if (distance < 1)
        throw std::invalid_argument("co-occurrence distance must be >= 1, got " +
                                    std::to_string(distance));

    int dx = 0, dy = 0;
    switch (angle_deg) {
        case 0:   dx = distance; dy = 0;         break;
        case 45:  dx = distance; dy = -distance; break;
        case 90:  dx = 0;        dy = -distance; break;
        case 135: dx = -distance; dy = -distance; break;
        default:
            throw std::invalid_argument("co-occurrence angle must be one of 0, 45, 90, 135; got " +
                                        std::to_string(angle_deg));
    }

    Glcm16 glcm;
    glcm.distance = distance;
    glcm.angle_deg = angle_deg;

    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || nx >= width || ny < 0 || ny >= height) continue;
            const std::uint8_t m = levels[static_cast<std::size_t>(y) * width + x];
            const std::uint8_t n = levels[static_cast<std::size_t>(ny) * width + nx];
            if (m > 15 || n > 15)
                throw std::invalid_argument("level grid contains a value above 15");
            ++glcm.counts[m][n];
            ++glcm.total;
        }
    }

    if (glcm.total > 0) {
        const double t = static_cast<double>(glcm.total);
        for (int m = 0; m < 16; ++m)
            for (int n = 0; n < 16; ++n)
                glcm.probs[m][n] = static_cast<double>(glcm.counts[m][n]) / t;
    }
    return glcm;
}

SecondOrderStats glcm_features(const Glcm16& glcm) {
    if (!glcm.has_pairs())
        throw std::invalid_argument("GLCM holds no pixel pairs; features are undefined");

    SecondOrderStats f;
    for (int m = 0; m < 16; ++m) {
        for (int n = 0; n < 16; ++n) {
            const double p = glcm.probs[m][n];
            const double d2 = static_cast<double>((m - n) * (m - n));
            f.contrast += d2 * p;
            if (p > 0.0) f.entropy -= p * std::log(p);
            f.energy += p * p;
            f.idm += p / (1.0 + d2);
        }
    }
    return f;
}

namespace {

void validate(const SmoothingParams& p) {
    if (p.window < 1 || p.window % 2 == 0)
        throw std::invalid_argument("smoothing window must be odd and positive, got " +
                                    std::to_string(p.window));
    if (p.polyorder < 0 || p.polyorder >= p.window)
        throw std::invalid_argument("polynomial order must satisfy 0 <= order < window, got " +
                                    std::to_string(p.polyorder));
}

// Solves the small dense system A x = b in place (Gaussian elimination with
// partial pivoting). Sizes here are (polyorder+1), never more than a handful.
std::vector<double> solve_linear(std::vector<std::vector<double>> a, std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        if (a[col][col] == 0.0)
            throw std::runtime_error("singular normal equations in polynomial fit");
        for (int r = col + 1; r < n; ++r) {
            const double f = a[r][col] / a[col][col];
            for (int c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int r = n - 1; r >= 0; --r) {
        double acc = b[r];
        for (int c = r + 1; c < n; ++c) acc -= a[r][c] * x[c];
        x[r] = acc / a[r][r];
    }
    return x;
}

// Least-squares polynomial fit of (offsets, values) evaluated at offset 0.
// Values are shifted by `reference` before fitting, so an all-equal window
// returns `reference` exactly (the shifted system is homogeneous and solves
// to the zero polynomial with no rounding).
double fit_at_zero(std::span<const double> values, int start, int window, int eval_offset,
                   int order, double reference) {
    const int terms = order + 1;
    std::vector<std::vector<double>> ata(terms, std::vector<double>(terms, 0.0));
    std::vector<double> atb(terms, 0.0);
    std::vector<double> powers(terms);

    for (int j = 0; j < window; ++j) {
        const double x = j - eval_offset;
        const double z = values[start + j] - reference;
        powers[0] = 1.0;
        for (int p = 1; p < terms; ++p) powers[p] = powers[p - 1] * x;
        for (int p = 0; p < terms; ++p) {
            atb[p] += powers[p] * z;
            for (int q = 0; q < terms; ++q) ata[p][q] += powers[p] * powers[q];
        }
    }
    return reference + solve_linear(std::move(ata), std::move(atb))[0];
}

}  // namespace

std::vector<double> savitzky_golay(std::span<const double> series, const SmoothingParams& params) {
    validate(params);
    const int n = static_cast<int>(series.size());
    if (n < params.window)
        throw std::invalid_argument("series length " + std::to_string(n) +
                                    " is shorter than the smoothing window " +
                                    std::to_string(params.window));

    const int half = params.window / 2;
    std::vector<double> out(series.size());
    for (int i = 0; i < n; ++i) {
        // Interior points use the centered window; near the ends the window
        // is pinned to the series boundary and the fit is evaluated at the
        // off-center position.
        const int start = std::clamp(i - half, 0, n - params.window);
        out[i] = fit_at_zero(series, start, params.window, i - start, params.polyorder,
                             series[i]);
    }
    return out;
}

DistributionCurve pixel_distribution(std::span<const std::uint8_t> roi_pixels,
                                     const SmoothingParams& smoothing) {
    if (roi_pixels.empty())
        throw std::invalid_argument("cannot build a distribution of an empty ROI");

    DistributionCurve curve;
    for (std::uint8_t v : roi_pixels) curve.raw[v] += 1.0;
    const std::vector<double> smoothed = savitzky_golay(curve.raw, smoothing);
    std::copy(smoothed.begin(), smoothed.end(), curve.smoothed.begin());
    return curve;
}

}  // namespace scaffscan
