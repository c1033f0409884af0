#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fer/emotion.hpp"

namespace fer {

struct ImageSample {
    std::string image_path;
    std::string dataset_id;
    std::string subject_id;
    Emotion emotion = Emotion::Angry;
    std::optional<Gaze> gaze;  // RaFD-style datasets only

    bool operator==(const ImageSample&) const = default;
};

struct ScanResult {
    std::vector<ImageSample> samples;  // sorted lexicographically by path
    std::array<std::int64_t, kEmotionCount> per_class_counts{};
    int subject_count = 0;
    int skipped = 0;
    std::vector<std::string> warnings;
    bool synthetic = false;  // set when the root carries a .fer_synthetic marker
};

// Known directory conventions. Both expect one subdirectory per emotion name;
// "rafd" additionally parses a gaze token (front/frontal/left/right) from the
// underscore-separated filename. See README for the exact rules.
std::vector<std::string> known_layouts();

ScanResult scan_dataset(const std::filesystem::path& root, const std::string& layout);

enum class SplitPolicy { by_image, by_subject, full_train };

const char* to_string(SplitPolicy p);
std::optional<SplitPolicy> parse_split_policy(std::string_view s);

struct SplitRatios {
    double train = 0.7;
    double val = 0.15;
    double test = 0.15;

    bool operator==(const SplitRatios&) const = default;
};

struct SplitManifest {
    std::vector<ImageSample> train;
    std::vector<ImageSample> val;
    std::vector<ImageSample> test;
    SplitRatios ratios;
    SplitPolicy policy = SplitPolicy::by_image;
    std::uint64_t seed = 0;

    // Load-time metadata, not part of manifest identity.
    bool missing_files_warning = false;
    std::vector<std::string> missing_paths;

    std::size_t total() const { return train.size() + val.size() + test.size(); }
    bool equals(const SplitManifest& other) const;
};

// Deterministic split of `samples` (in their given order) for (ratios, policy,
// seed). Sizes follow the largest-remainder rule: each split gets
// floor(ratio*N) and leftover images go to the splits with the largest
// fractional parts, ties broken in train, val, test order. Under by_subject,
// whole subjects are assigned greedily to the split with the largest remaining
// image deficit, so no subject straddles splits.
SplitManifest make_split(const std::vector<ImageSample>& samples, SplitRatios ratios,
                         SplitPolicy policy, std::uint64_t seed);

// Same contract, but with exact per-split image counts (by_image only).
SplitManifest make_split_counts(const std::vector<ImageSample>& samples,
                                const std::array<std::int64_t, 3>& counts, std::uint64_t seed);

// Line-oriented CSV, UTF-8, LF endings:
//   #fer-manifest v1
//   #policy=...  #seed=...  #ratios=...
//   dataset_id,subject_id,emotion,gaze,split,path
void save_manifest(const SplitManifest& manifest, const std::filesystem::path& path);

// Round-trip identity with save_manifest. Overlapping split membership is a
// validation error; referenced files that no longer exist only set
// missing_files_warning.
SplitManifest load_manifest(const std::filesystem::path& path);

}  // namespace fer
