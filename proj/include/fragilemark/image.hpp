#pragma once

#include <cstdint>
#include <vector>

#include "fragilemark/error.hpp"

namespace fragilemark {

/// 8-bit raster image, row-major interleaved samples, 1 (gray) or 3 (RGB)
/// channels. Sample at (x, y, c) lives at data[(y * width + x) * channels + c].
/// Treated as immutable once built; all pipeline stages return fresh images.
struct RasterImage {
    int width = 0;
    int height = 0;
    int channels = 0;
    std::vector<std::uint8_t> data;

    RasterImage() = default;
    RasterImage(int w, int h, int c, std::uint8_t fill = 0);
    RasterImage(int w, int h, int c, std::vector<std::uint8_t> samples);

    std::uint8_t at(int x, int y, int c = 0) const {
        return data[static_cast<std::size_t>(y * width + x) * channels + c];
    }
    std::uint8_t& at(int x, int y, int c = 0) {
        return data[static_cast<std::size_t>(y * width + x) * channels + c];
    }

    std::size_t sample_count() const { return data.size(); }
    std::size_t pixel_count() const {
        return static_cast<std::size_t>(width) * height;
    }
    bool valid() const;

    bool operator==(const RasterImage& other) const = default;
};

/// True iff the pair can be fed to the full-reference metrics
/// (identical width, height and channel count).
bool comparable(const RasterImage& a, const RasterImage& b);

/// Throws DimensionMismatch unless comparable(a, b).
void require_comparable(const RasterImage& a, const RasterImage& b,
                        const char* context);

/// BT.601 luma conversion, round() and clamp per sample. Grayscale input is
/// returned unchanged. Idempotent.
RasterImage to_grayscale(const RasterImage& img);

/// Replicates a grayscale image into `channels` interleaved channels.
/// 3-channel input is returned unchanged when channels == 3.
RasterImage expand_channels(const RasterImage& img, int channels);

/// BT.601 luma of one pixel's samples, unrounded.
inline double luma_of(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    return 0.299 * r + 0.587 * g + 0.114 * b;
}

/// Luma plane as doubles (no rounding), length width*height.
std::vector<double> luma_plane(const RasterImage& img);

inline std::uint8_t clamp_u8(double v) {
    if (v <= 0.0) return 0;
    if (v >= 255.0) return 255;
    return static_cast<std::uint8_t>(v + 0.5);
}

inline std::uint8_t clamp_round_i(int v) {
    if (v < 0) return 0;
    if (v > 255) return 255;
    return static_cast<std::uint8_t>(v);
}

} // namespace fragilemark
