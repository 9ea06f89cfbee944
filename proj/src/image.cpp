#include "scaffscan/image.hpp"

namespace scaffscan {

namespace {

void require_in_bounds(const Grayscale8Image& image, const RoiRect& rect, const char* what) {
    if (!image.contains(rect))
        throw std::out_of_range(std::string(what) + " rect (" + std::to_string(rect.x) + "," +
                                std::to_string(rect.y) + "," + std::to_string(rect.w) + "x" +
                                std::to_string(rect.h) + ") outside " +
                                std::to_string(image.width()) + "x" +
                                std::to_string(image.height()) + " image");
}

}  // namespace

Grayscale8Image crop(const Grayscale8Image& image, const RoiRect& rect) {
    require_in_bounds(image, rect, "crop");
    Grayscale8Image out(rect.w, rect.h);
    for (int j = 0; j < rect.h; ++j)
        for (int i = 0; i < rect.w; ++i)
            out(i, j) = image(rect.x + i, rect.y + j);
    return out;
}

std::vector<std::uint8_t> extract_roi(const Grayscale8Image& image, const RoiRect& rect) {
    require_in_bounds(image, rect, "roi");
    std::vector<std::uint8_t> out;
    out.reserve(static_cast<std::size_t>(rect.w) * rect.h);
    for (int j = 0; j < rect.h; ++j)
        for (int i = 0; i < rect.w; ++i)
            out.push_back(image(rect.x + i, rect.y + j));
    return out;
}

}  // namespace scaffscan
