#pragma once

#include <filesystem>

#include "fer/image.hpp"

namespace fer {

// Decodes a PNG/JPEG file. Gray stays single-channel; color becomes RGB;
// alpha is dropped. Throws Error(io) if the file is missing or undecodable.
Image load_image(const std::filesystem::path& path);

bool decodes_as_image(const std::filesystem::path& path);

// 8-bit grayscale PNG.
void save_png(const GrayImage& img, const std::filesystem::path& path);

// Saliency persisted as 8-bit grayscale PNG, value = round(255 * v).
void save_png(const SaliencyMap& map, const std::filesystem::path& path);

GrayImage load_gray_png(const std::filesystem::path& path);

// Inverse of save_png(SaliencyMap): values = pixel / 255.
SaliencyMap load_saliency_png(const std::filesystem::path& path);

}  // namespace fer
