#include "fer/image_io.hpp"

#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include <cmath>

#include "fer/error.hpp"

namespace fer {

namespace {

cv::Mat imread_checked(const std::filesystem::path& path, int flags) {
    if (!std::filesystem::exists(path)) {
        throw Error(ErrorCategory::io, "image not found: " + path.string());
    }
    cv::Mat m = cv::imread(path.string(), flags);
    if (m.empty()) {
        throw Error(ErrorCategory::io, "cannot decode image: " + path.string());
    }
    return m;
}

}  // namespace

Image load_image(const std::filesystem::path& path) {
    cv::Mat m = imread_checked(path, cv::IMREAD_UNCHANGED);
    if (m.depth() != CV_8U) {
        cv::Mat tmp;
        m.convertTo(tmp, CV_8U, m.depth() == CV_16U ? 1.0 / 257.0 : 1.0);
        m = tmp;
    }
    Image out;
    out.width = m.cols;
    out.height = m.rows;
    if (m.channels() == 1) {
        out.channels = 1;
    } else if (m.channels() == 3 || m.channels() == 4) {
        cv::Mat rgb;
        cv::cvtColor(m, rgb, m.channels() == 4 ? cv::COLOR_BGRA2RGB : cv::COLOR_BGR2RGB);
        m = rgb;
        out.channels = 3;
    } else {
        throw Error(ErrorCategory::io,
                    "unsupported channel count in " + path.string() + ": " + std::to_string(m.channels()));
    }
    out.pixels.resize(static_cast<std::size_t>(out.width) * out.height * out.channels);
    if (m.isContinuous()) {
        std::copy(m.data, m.data + out.pixels.size(), out.pixels.begin());
    } else {
        for (int y = 0; y < m.rows; ++y) {
            const std::uint8_t* row = m.ptr<std::uint8_t>(y);
            std::copy(row, row + static_cast<std::size_t>(m.cols) * out.channels,
                      out.pixels.begin() + static_cast<std::size_t>(y) * m.cols * out.channels);
        }
    }
    return out;
}

bool decodes_as_image(const std::filesystem::path& path) {
    // Reduced decode: enough to validate the stream without full-size work.
    cv::Mat m = cv::imread(path.string(), cv::IMREAD_REDUCED_GRAYSCALE_8);
    if (!m.empty()) return true;
    m = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
    return !m.empty();
}

namespace {

void imwrite_checked(const cv::Mat& m, const std::filesystem::path& path) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (!cv::imwrite(path.string(), m)) {
        throw Error(ErrorCategory::io, "cannot write " + path.string());
    }
}

}  // namespace

void save_png(const GrayImage& img, const std::filesystem::path& path) {
    cv::Mat m(img.height, img.width, CV_8UC1, const_cast<std::uint8_t*>(img.pixels.data()));
    imwrite_checked(m, path);
}

void save_png(const SaliencyMap& map, const std::filesystem::path& path) {
    cv::Mat m(map.height, map.width, CV_8UC1);
    for (int y = 0; y < map.height; ++y) {
        std::uint8_t* row = m.ptr<std::uint8_t>(y);
        for (int x = 0; x < map.width; ++x) {
            const double v = std::floor(255.0 * map.at(x, y) + 0.5);
            row[x] = static_cast<std::uint8_t>(std::clamp(v, 0.0, 255.0));
        }
    }
    imwrite_checked(m, path);
}

GrayImage load_gray_png(const std::filesystem::path& path) {
    cv::Mat m = imread_checked(path, cv::IMREAD_GRAYSCALE);
    GrayImage out = make_gray(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(y);
        std::copy(row, row + m.cols, out.pixels.begin() + static_cast<std::size_t>(y) * m.cols);
    }
    return out;
}

SaliencyMap load_saliency_png(const std::filesystem::path& path) {
    const GrayImage g = load_gray_png(path);
    SaliencyMap map = make_saliency(g.width, g.height);
    for (std::size_t i = 0; i < g.pixels.size(); ++i) {
        map.values[i] = static_cast<float>(g.pixels[i] / 255.0);
    }
    return map;
}

}  // namespace fer
