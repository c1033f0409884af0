#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "fer/image.hpp"

namespace fer {

// Min-max rescale to [0, 1]: (v - min) / (max - min). A constant grid maps to
// all zeros; after that, max == 1 exactly unless the map is all-zero.
// NaN or Inf anywhere in the input is an error.
SaliencyMap normalize_map(int width, int height, const std::vector<double>& raw);

// Spectral-residual saliency: FFT of the 64x64 downsampled image, residual of
// the log-amplitude spectrum against its 3x3 local average, inverse FFT,
// squared magnitude, Gaussian blur (sigma 2.5 px), upsample to the input size,
// min-max normalize. Deterministic; input must be at least 16x16.
SaliencyMap spectral_residual_saliency(const GrayImage& image);

class SaliencyBackend {
public:
    virtual ~SaliencyBackend() = default;
    virtual std::string id() const = 0;
    // `source_name` is the originating image filename; directory-backed
    // adapters use it as the lookup key.
    virtual SaliencyMap compute(const GrayImage& image, const std::string& source_name) const = 0;
};

// Backend spec strings: "spectral", or "external:<dir>" for a directory of
// precomputed maps keyed by source filename stem (<dir>/<stem>.png). Unknown
// specs raise BackendError naming the known forms.
std::unique_ptr<SaliencyBackend> make_saliency_backend(const std::string& spec);

// Writes <path> as 8-bit gray PNG plus a "<path>.json" sidecar recording the
// backend id and source filename.
void save_saliency(const SaliencyMap& map, const std::filesystem::path& path,
                   const std::string& backend_id, const std::string& source_name);

}  // namespace fer
