#include "scaffscan/segmentation.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scaffscan {

Histogram256 histogram(const Grayscale8Image& image) {
    Histogram256 h;
    for (std::uint8_t v : image.pixels()) ++h.bins[v];
    h.total = image.pixels().size();
    return h;
}

OtsuResult otsu_threshold(const Histogram256& hist) {
    if (hist.total == 0)
        throw std::invalid_argument("cannot choose a threshold from an empty histogram");
    const double total = static_cast<double>(hist.total);

    std::uint64_t weighted_total = 0;
    for (int i = 0; i < 256; ++i) weighted_total += static_cast<std::uint64_t>(i) * hist.bins[i];

    OtsuResult result;
    result.mu = static_cast<double>(weighted_total) / total;

    // Running sums over the target class (grays < k); integer arithmetic keeps
    // the plateau values exactly equal so tie-breaking is deterministic.
    std::uint64_t n0 = 0;
    std::uint64_t sum0 = 0;
    int best_k = 0;
    double best_g = -1.0;

    for (int k = 0; k < 256; ++k) {
        const std::uint64_t n1 = hist.total - n0;
        double g = 0.0;
        if (n0 > 0 && n1 > 0) {
            const double w0 = static_cast<double>(n0) / total;
            const double w1 = static_cast<double>(n1) / total;
            const double mu0 = static_cast<double>(sum0) / static_cast<double>(n0);
            const double mu1 =
                static_cast<double>(weighted_total - sum0) / static_cast<double>(n1);
            const double diff = mu0 - mu1;
            g = w0 * w1 * diff * diff;
        }
        result.variance_curve[k] = g;
        if (g > best_g) {  // strict: ties resolve to the smallest k
            best_g = g;
            best_k = k;
        }
        n0 += hist.bins[k];
        sum0 += static_cast<std::uint64_t>(k) * hist.bins[k];
    }

    result.threshold = best_k;

    std::uint64_t tn0 = 0, tsum0 = 0;
    for (int i = 0; i < best_k; ++i) {
        tn0 += hist.bins[i];
        tsum0 += static_cast<std::uint64_t>(i) * hist.bins[i];
    }
    const std::uint64_t tn1 = hist.total - tn0;
    result.w0 = static_cast<double>(tn0) / total;
    result.w1 = static_cast<double>(tn1) / total;
    result.mu0 = tn0 > 0 ? static_cast<double>(tsum0) / static_cast<double>(tn0) : 0.0;
    result.mu1 =
        tn1 > 0 ? static_cast<double>(weighted_total - tsum0) / static_cast<double>(tn1) : 0.0;
    return result;
}

BinaryMask apply_threshold(const Grayscale8Image& image, int threshold) {
    if (threshold < 0 || threshold > 255)
        throw std::invalid_argument("threshold must be in [0, 255], got " +
                                    std::to_string(threshold));
    std::vector<std::uint8_t> out(image.pixels().size());
    const auto& in = image.pixels();
    for (std::size_t i = 0; i < in.size(); ++i)
        out[i] = in[i] >= threshold ? BinaryMask::white : BinaryMask::black;
    return BinaryMask(image.width(), image.height(), std::move(out));
}

namespace {

void validate_kernel(const MorphKernel& k) {
    if (k.width < 1 || k.height < 1 || k.width % 2 == 0 || k.height % 2 == 0)
        throw std::invalid_argument("structuring element sides must be odd and positive, got " +
                                    std::to_string(k.width) + "x" + std::to_string(k.height));
}

// Shared window scan: erosion asks "are all covered pixels black", dilation
// asks "is any covered pixel black". Out-of-bounds counts as background
// (white), which is the identity for both questions.
template <bool Erode>
BinaryMask morph_pass(const BinaryMask& mask, const MorphKernel& kernel) {
    const int w = mask.width();
    const int h = mask.height();
    const int rx = kernel.width / 2;
    const int ry = kernel.height / 2;
    std::vector<std::uint8_t> out(static_cast<std::size_t>(w) * h);

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            bool all_black = true;
            bool any_black = false;
            for (int dy = -ry; dy <= ry; ++dy) {
                for (int dx = -rx; dx <= rx; ++dx) {
                    const int nx = x + dx;
                    const int ny = y + dy;
                    const bool black =
                        mask.contains(nx, ny) && mask(nx, ny) == BinaryMask::black;
                    all_black = all_black && black;
                    any_black = any_black || black;
                }
            }
            const bool keep = Erode ? all_black : any_black;
            out[static_cast<std::size_t>(y) * w + x] =
                keep ? BinaryMask::black : BinaryMask::white;
        }
    }
    return BinaryMask(w, h, std::move(out));
}

}  // namespace

BinaryMask erode(const BinaryMask& mask, const MorphKernel& kernel) {
    validate_kernel(kernel);
    return morph_pass<true>(mask, kernel);
}

BinaryMask dilate(const BinaryMask& mask, const MorphKernel& kernel) {
    validate_kernel(kernel);
    return morph_pass<false>(mask, kernel);
}

BinaryMask morphological_open(const BinaryMask& mask, const MorphKernel& kernel, int iterations) {
    validate_kernel(kernel);
    if (iterations < 1)
        throw std::invalid_argument("opening iterations must be >= 1, got " +
                                    std::to_string(iterations));
    BinaryMask result = mask;
    for (int i = 0; i < iterations; ++i) result = dilate(erode(result, kernel), kernel);
    return result;
}

std::uint64_t count_black(const BinaryMask& mask) {
    std::uint64_t n = 0;
    for (std::uint8_t v : mask.pixels())
        if (v == BinaryMask::black) ++n;
    return n;
}

}  // namespace scaffscan
