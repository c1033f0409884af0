#include "fer/image.hpp"

#include <algorithm>
#include <cmath>

#include "fer/error.hpp"

namespace fer {

GrayImage make_gray(int width, int height, std::uint8_t fill) {
    GrayImage img;
    img.width = width;
    img.height = height;
    img.pixels.assign(static_cast<std::size_t>(width) * height, fill);
    return img;
}

SaliencyMap make_saliency(int width, int height, float fill) {
    SaliencyMap map;
    map.width = width;
    map.height = height;
    map.values.assign(static_cast<std::size_t>(width) * height, fill);
    return map;
}

std::uint8_t luma_bt601(std::uint8_t r, std::uint8_t g, std::uint8_t b) {
    const int v = (299 * r + 587 * g + 114 * b + 500) / 1000;
    return static_cast<std::uint8_t>(v);
}

GrayImage to_gray(const Image& img) {
    GrayImage out;
    out.width = img.width;
    out.height = img.height;
    out.pixels.resize(static_cast<std::size_t>(img.width) * img.height);
    if (img.channels == 1) {
        out.pixels = img.pixels;
        return out;
    }
    if (img.channels != 3) {
        throw Error(ErrorCategory::validation,
                    "to_gray: unsupported channel count " + std::to_string(img.channels));
    }
    const std::uint8_t* p = img.pixels.data();
    for (std::size_t i = 0; i < out.pixels.size(); ++i, p += 3) {
        out.pixels[i] = luma_bt601(p[0], p[1], p[2]);
    }
    return out;
}

namespace {

struct Taps {
    int i0, i1;
    double frac;
};

// Pixel-center mapping with edge clamping.
inline Taps taps_for(int out_i, int out_n, int src_n) {
    const double s = (out_i + 0.5) * static_cast<double>(src_n) / out_n - 0.5;
    const double fl = std::floor(s);
    int i0 = static_cast<int>(fl);
    int i1 = i0 + 1;
    const double frac = s - fl;
    i0 = std::clamp(i0, 0, src_n - 1);
    i1 = std::clamp(i1, 0, src_n - 1);
    return {i0, i1, frac};
}

template <typename SrcAt, typename Out>
void resample(int src_w, int src_h, int out_w, int out_h, SrcAt src_at, Out out) {
    std::vector<Taps> xt(static_cast<std::size_t>(out_w));
    for (int x = 0; x < out_w; ++x) xt[static_cast<std::size_t>(x)] = taps_for(x, out_w, src_w);
    for (int y = 0; y < out_h; ++y) {
        const Taps ty = taps_for(y, out_h, src_h);
        for (int x = 0; x < out_w; ++x) {
            const Taps& tx = xt[static_cast<std::size_t>(x)];
            const double v00 = src_at(tx.i0, ty.i0);
            const double v10 = src_at(tx.i1, ty.i0);
            const double v01 = src_at(tx.i0, ty.i1);
            const double v11 = src_at(tx.i1, ty.i1);
            const double top = v00 + (v10 - v00) * tx.frac;
            const double bot = v01 + (v11 - v01) * tx.frac;
            out(x, y, top + (bot - top) * ty.frac);
        }
    }
}

void check_dims(int src_w, int src_h, int out_w, int out_h) {
    if (src_w <= 0 || src_h <= 0 || out_w <= 0 || out_h <= 0) {
        throw Error(ErrorCategory::validation, "resize: dimensions must be positive");
    }
}

}  // namespace

GrayImage resize_bilinear(const GrayImage& src, int out_w, int out_h) {
    check_dims(src.width, src.height, out_w, out_h);
    if (out_w == src.width && out_h == src.height) return src;
    GrayImage out = make_gray(out_w, out_h);
    resample(
        src.width, src.height, out_w, out_h,
        [&](int x, int y) { return static_cast<double>(src.at(x, y)); },
        [&](int x, int y, double v) {
            out.at(x, y) = static_cast<std::uint8_t>(std::clamp(std::floor(v + 0.5), 0.0, 255.0));
        });
    return out;
}

SaliencyMap resize_bilinear(const SaliencyMap& src, int out_w, int out_h) {
    check_dims(src.width, src.height, out_w, out_h);
    if (out_w == src.width && out_h == src.height) return src;
    SaliencyMap out = make_saliency(out_w, out_h);
    resample(
        src.width, src.height, out_w, out_h,
        [&](int x, int y) { return static_cast<double>(src.at(x, y)); },
        [&](int x, int y, double v) { out.at(x, y) = static_cast<float>(v); });
    return out;
}

std::vector<double> resize_bilinear_plane(const std::vector<double>& src, int src_w, int src_h,
                                          int out_w, int out_h) {
    check_dims(src_w, src_h, out_w, out_h);
    if (out_w == src_w && out_h == src_h) return src;
    std::vector<double> out(static_cast<std::size_t>(out_w) * out_h);
    resample(
        src_w, src_h, out_w, out_h,
        [&](int x, int y) { return src[static_cast<std::size_t>(y) * src_w + x]; },
        [&](int x, int y, double v) { out[static_cast<std::size_t>(y) * out_w + x] = v; });
    return out;
}

}  // namespace fer
