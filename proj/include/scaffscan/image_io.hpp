#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "scaffscan/image.hpp"

namespace scaffscan {

enum class ImageIoErrorKind {
    missing_file,
    unsupported_format,
    bad_maxval,
    truncated_payload,
    io_failure,
};

class ImageIoError : public std::runtime_error {
public:
    ImageIoError(ImageIoErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ImageIoErrorKind kind() const { return kind_; }

private:
    ImageIoErrorKind kind_;
};

// Reads a binary PGM ("P5", maxval 255). The returned image is bit-exact to
// the stored pixel payload.
Grayscale8Image load_image(const std::filesystem::path& path);

// Writes binary PGM; load_image(path) after save_image(img, path) == img.
void save_image(const Grayscale8Image& image, const std::filesystem::path& path);

// Loads a PGM and validates the {0,255} pixel invariant.
BinaryMask load_mask(const std::filesystem::path& path);

void save_mask(const BinaryMask& mask, const std::filesystem::path& path);

}  // namespace scaffscan
