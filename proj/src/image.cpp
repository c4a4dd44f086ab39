#include "fragilemark/image.hpp"

#include <string>

namespace fragilemark {

RasterImage::RasterImage(int w, int h, int c, std::uint8_t fill)
    : width(w), height(h), channels(c),
      data(static_cast<std::size_t>(w) * h * c, fill) {}

RasterImage::RasterImage(int w, int h, int c, std::vector<std::uint8_t> samples)
    : width(w), height(h), channels(c), data(std::move(samples)) {
    if (!valid()) {
        throw DimensionMismatch("RasterImage: sample buffer length " +
                                std::to_string(data.size()) +
                                " does not match " + std::to_string(w) + "x" +
                                std::to_string(h) + "x" + std::to_string(c));
    }
}

bool RasterImage::valid() const {
    if (width < 1 || height < 1) return false;
    if (channels != 1 && channels != 3) return false;
    return data.size() == static_cast<std::size_t>(width) * height * channels;
}

bool comparable(const RasterImage& a, const RasterImage& b) {
    return a.width == b.width && a.height == b.height &&
           a.channels == b.channels;
}

void require_comparable(const RasterImage& a, const RasterImage& b,
                        const char* context) {
    if (!comparable(a, b)) {
        throw DimensionMismatch(
            std::string(context) + ": images not comparable (" +
            std::to_string(a.width) + "x" + std::to_string(a.height) + "x" +
            std::to_string(a.channels) + " vs " + std::to_string(b.width) +
            "x" + std::to_string(b.height) + "x" + std::to_string(b.channels) +
            ")");
    }
}

RasterImage to_grayscale(const RasterImage& img) {
    if (img.channels == 1) return img;
    RasterImage out(img.width, img.height, 1);
    const std::uint8_t* src = img.data.data();
    for (std::size_t i = 0; i < out.data.size(); ++i, src += 3) {
        out.data[i] = clamp_u8(luma_of(src[0], src[1], src[2]));
    }
    return out;
}

RasterImage expand_channels(const RasterImage& img, int channels) {
    if (img.channels == channels) return img;
    if (img.channels != 1 || channels != 3) {
        throw DimensionMismatch("expand_channels: only gray -> RGB supported");
    }
    RasterImage out(img.width, img.height, 3);
    for (std::size_t i = 0; i < img.data.size(); ++i) {
        out.data[3 * i] = out.data[3 * i + 1] = out.data[3 * i + 2] =
            img.data[i];
    }
    return out;
}

std::vector<double> luma_plane(const RasterImage& img) {
    std::vector<double> out(img.pixel_count());
    if (img.channels == 1) {
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = img.data[i];
        }
    } else {
        const std::uint8_t* src = img.data.data();
        for (std::size_t i = 0; i < out.size(); ++i, src += 3) {
            out[i] = luma_of(src[0], src[1], src[2]);
        }
    }
    return out;
}

} // namespace fragilemark
