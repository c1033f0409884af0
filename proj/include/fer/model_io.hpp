#pragma once

#include <filesystem>

#include "fer/net.hpp"

namespace fer {

// Single-file model archive:
//   magic "FERMDL1\n", little-endian u32 header length, JSON header
//   (backbone id, dropout, input mean, class order, config echo, tensor
//   directory), then the tensor payload as little-endian float32 in directory
//   order. Parameters are truncated double -> float32 on save.
void save_model(ClassifierModel& model, const std::filesystem::path& path);

ClassifierModel load_model(const std::filesystem::path& path);

}  // namespace fer
