#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace scaffscan {

// Axis-aligned rectangle in image coordinates. The origin is the upper-left
// corner of the image, x grows eastward (columns), y grows downward (rows).
// Ranges are half-open: a rect covers columns [x, x+w) and rows [y, y+h).
struct RoiRect {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;

    bool operator==(const RoiRect&) const = default;
};

// 8-bit single-channel raster, row-major.
class Grayscale8Image {
public:
    Grayscale8Image() = default;

    Grayscale8Image(int width, int height, std::uint8_t fill = 0)
        : width_(width), height_(height) {
        check_dims(width, height);
        pixels_.assign(static_cast<std::size_t>(width) * height, fill);
    }

    Grayscale8Image(int width, int height, std::vector<std::uint8_t> pixels)
        : width_(width), height_(height), pixels_(std::move(pixels)) {
        check_dims(width, height);
        if (pixels_.size() != static_cast<std::size_t>(width) * height)
            throw std::invalid_argument("pixel count does not match image dimensions");
    }

    int width() const { return width_; }
    int height() const { return height_; }
    bool empty() const { return pixels_.empty(); }

    std::uint8_t operator()(int x, int y) const {
        assert(contains(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }
    std::uint8_t& operator()(int x, int y) {
        assert(contains(x, y));
        return pixels_[static_cast<std::size_t>(y) * width_ + x];
    }

    bool contains(int x, int y) const {
        return x >= 0 && x < width_ && y >= 0 && y < height_;
    }
    bool contains(const RoiRect& r) const {
        return r.w > 0 && r.h > 0 && r.x >= 0 && r.y >= 0 &&
               r.x + r.w <= width_ && r.y + r.h <= height_;
    }

    const std::vector<std::uint8_t>& pixels() const { return pixels_; }
    std::vector<std::uint8_t>& pixels() { return pixels_; }

    bool operator==(const Grayscale8Image&) const = default;

private:
    static void check_dims(int width, int height) {
        if (width <= 0 || height <= 0)
            throw std::invalid_argument("image dimensions must be positive");
    }

    int width_ = 0;
    int height_ = 0;
    std::vector<std::uint8_t> pixels_;
};

// Per-pixel {0, 255} image. By convention of this toolkit the object of
// interest (the scaffold) is black (0) and background is white (255).
class BinaryMask {
public:
    static constexpr std::uint8_t black = 0;
    static constexpr std::uint8_t white = 255;

    BinaryMask() = default;

    BinaryMask(int width, int height, std::uint8_t fill = white)
        : image_(width, height, fill) {
        check_value(fill);
    }

    BinaryMask(int width, int height, std::vector<std::uint8_t> pixels)
        : image_(width, height, std::move(pixels)) {
        for (std::uint8_t v : image_.pixels()) check_value(v);
    }

    // Validates that every pixel of `img` is 0 or 255.
    static BinaryMask from_image(const Grayscale8Image& img) {
        return BinaryMask(img.width(), img.height(), img.pixels());
    }

    const Grayscale8Image& as_image() const { return image_; }

    int width() const { return image_.width(); }
    int height() const { return image_.height(); }

    std::uint8_t operator()(int x, int y) const { return image_(x, y); }

    void set(int x, int y, std::uint8_t v) {
        check_value(v);
        image_(x, y) = v;
    }

    bool contains(int x, int y) const { return image_.contains(x, y); }
    const std::vector<std::uint8_t>& pixels() const { return image_.pixels(); }

    bool operator==(const BinaryMask&) const = default;

private:
    static void check_value(std::uint8_t v) {
        if (v != black && v != white)
            throw std::invalid_argument("binary mask pixel must be 0 or 255, got " +
                                        std::to_string(int(v)));
    }

    Grayscale8Image image_;
};

// Copies the w×h window of `image` selected by `rect`. Output pixel (i, j)
// equals input pixel (rect.x + i, rect.y + j).
Grayscale8Image crop(const Grayscale8Image& image, const RoiRect& rect);

// Row-major pixel sequence of the rect, length w×h.
std::vector<std::uint8_t> extract_roi(const Grayscale8Image& image, const RoiRect& rect);

}  // namespace scaffscan
