#pragma once

#include <cstdint>
#include <vector>

namespace fer {

// 8-bit image, row-major, interleaved RGB when channels == 3.
struct Image {
    int width = 0;
    int height = 0;
    int channels = 1;  // 1 (gray) or 3 (RGB)
    std::vector<std::uint8_t> pixels;

    bool empty() const { return pixels.empty(); }
};

// Single-channel 8-bit image, row-major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t at(int x, int y) const { return pixels[static_cast<size_t>(y) * width + x]; }
    std::uint8_t& at(int x, int y) { return pixels[static_cast<size_t>(y) * width + x]; }
    bool empty() const { return pixels.empty(); }

    bool operator==(const GrayImage&) const = default;
};

GrayImage make_gray(int width, int height, std::uint8_t fill = 0);

// Per-pixel visual-attention weights in [0, 1], row-major; same grid as the
// image it was computed for.
struct SaliencyMap {
    int width = 0;
    int height = 0;
    std::vector<float> values;

    float at(int x, int y) const { return values[static_cast<size_t>(y) * width + x]; }
    float& at(int x, int y) { return values[static_cast<size_t>(y) * width + x]; }

    bool operator==(const SaliencyMap&) const = default;
};

SaliencyMap make_saliency(int width, int height, float fill = 0.0f);

// BT.601 luma, computed exactly in integer arithmetic:
//   luma = (299 R + 587 G + 114 B + 500) / 1000   (round half up)
std::uint8_t luma_bt601(std::uint8_t r, std::uint8_t g, std::uint8_t b);

GrayImage to_gray(const Image& img);

// Bilinear resampling with pixel-center alignment and edge clamping.
// Output values are convex combinations of input values, so min/max never
// leave the input range (before 8-bit rounding).
GrayImage resize_bilinear(const GrayImage& src, int out_w, int out_h);
SaliencyMap resize_bilinear(const SaliencyMap& src, int out_w, int out_h);
std::vector<double> resize_bilinear_plane(const std::vector<double>& src, int src_w, int src_h,
                                          int out_w, int out_h);

}  // namespace fer
