#include "scaffscan/image_io.hpp"

#include <cctype>
#include <fstream>

namespace scaffscan {

namespace {

[[noreturn]] void fail(ImageIoErrorKind kind, const std::filesystem::path& path,
                       const std::string& detail) {
    throw ImageIoError(kind, path.string() + ": " + detail);
}

// Reads the next header token, skipping whitespace and '#' comment lines.
std::string next_header_token(std::istream& in) {
    std::string token;
    int ch;
    while ((ch = in.get()) != EOF) {
        if (ch == '#') {
            while ((ch = in.get()) != EOF && ch != '\n') {}
            continue;
        }
        if (std::isspace(ch)) {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(static_cast<char>(ch));
    }
    return token;
}

int parse_header_int(std::istream& in, const std::filesystem::path& path, const char* name) {
    std::string token = next_header_token(in);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        fail(ImageIoErrorKind::unsupported_format, path,
             std::string("bad PGM header field ") + name);
    try {
        return std::stoi(token);
    } catch (const std::exception&) {
        fail(ImageIoErrorKind::unsupported_format, path,
             std::string("PGM header field out of range: ") + name);
    }
}

}  // namespace

Grayscale8Image load_image(const std::filesystem::path& path) {
    std::error_code ec;
    if (!std::filesystem::exists(path, ec))
        fail(ImageIoErrorKind::missing_file, path, "no such file");

    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ImageIoErrorKind::io_failure, path, "cannot open for reading");

    char magic[2] = {0, 0};
    in.read(magic, 2);
    if (!in || magic[0] != 'P' || magic[1] != '5')
        fail(ImageIoErrorKind::unsupported_format, path, "not a binary PGM (magic != P5)");

    const int width = parse_header_int(in, path, "width");
    const int height = parse_header_int(in, path, "height");
    const int maxval = parse_header_int(in, path, "maxval");
    if (width <= 0 || height <= 0)
        fail(ImageIoErrorKind::unsupported_format, path, "non-positive dimensions");
    if (maxval != 255)
        fail(ImageIoErrorKind::bad_maxval, path,
             "maxval " + std::to_string(maxval) + " unsupported, expected 255");
    // next_header_token consumed exactly one whitespace byte after the maxval,
    // so the raw payload starts here.

    const std::size_t expected = static_cast<std::size_t>(width) * height;
    std::vector<std::uint8_t> pixels(expected);
    in.read(reinterpret_cast<char*>(pixels.data()), static_cast<std::streamsize>(expected));
    const std::size_t got = static_cast<std::size_t>(in.gcount());
    if (got != expected)
        fail(ImageIoErrorKind::truncated_payload, path,
             "expected " + std::to_string(expected) + " payload bytes, got " +
                 std::to_string(got));

    return Grayscale8Image(width, height, std::move(pixels));
}

void save_image(const Grayscale8Image& image, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ImageIoErrorKind::io_failure, path, "cannot open for writing");

    out << "P5\n" << image.width() << " " << image.height() << "\n255\n";
    out.write(reinterpret_cast<const char*>(image.pixels().data()),
              static_cast<std::streamsize>(image.pixels().size()));
    out.flush();
    if (!out) fail(ImageIoErrorKind::io_failure, path, "write failed");
}

BinaryMask load_mask(const std::filesystem::path& path) {
    return BinaryMask::from_image(load_image(path));
}

void save_mask(const BinaryMask& mask, const std::filesystem::path& path) {
    save_image(mask.as_image(), path);
}

}  // namespace scaffscan
