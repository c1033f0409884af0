#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fer/image.hpp"

namespace fer {

struct FaceBox {
    int x = 0;
    int y = 0;
    int w = 0;
    int h = 0;
    double score = 0.0;

    std::int64_t area() const { return static_cast<std::int64_t>(w) * h; }
};

class FaceDetector {
public:
    virtual ~FaceDetector() = default;
    virtual std::string id() const = 0;
    // All detections, unfiltered. Implementations must be deterministic for a
    // fixed input and must not share mutable state across threads; callers
    // clone one instance per worker.
    virtual std::vector<FaceBox> detect(const Image& image) const = 0;
};

struct DetectorConfig {
    // Empty means: $FER_CASCADE_PATH if set, else the cascade bundled under data/.
    std::filesystem::path cascade_path;
};

using DetectorFactory = std::function<std::unique_ptr<FaceDetector>(const DetectorConfig&)>;

// Backend registry. "cascade" (boosted LBP cascade via OpenCV) is built in.
void register_detector(const std::string& id, DetectorFactory factory);
std::unique_ptr<FaceDetector> make_detector(const std::string& id, const DetectorConfig& config = {});
std::vector<std::string> known_detectors();

std::filesystem::path default_cascade_path();

// Highest-area detection (ties: topmost, then leftmost). Throws
// NoFaceFoundError carrying `source_path` when there are no detections.
FaceBox detect_face(const Image& image, const FaceDetector& detector,
                    const std::string& source_path = "");

// Crop the box, convert to grayscale (BT.601) and resize to 256x256 with
// bilinear interpolation. Boxes thinner than 8 px are rejected.
GrayImage crop_resize_gray(const Image& image, const FaceBox& box);

inline constexpr int kFaceSize = 256;

enum class NoFacePolicy { skip, full_frame };

std::optional<NoFacePolicy> parse_no_face_policy(std::string_view s);

}  // namespace fer
