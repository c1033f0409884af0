#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "fer/dataset.hpp"
#include "fer/evaluation.hpp"
#include "fer/face.hpp"
#include "fer/reports.hpp"
#include "fer/trainer.hpp"

namespace fer {

enum class PresetId { E1, E2, E3, E4 };

std::optional<PresetId> parse_preset(std::string_view s);
const char* to_string(PresetId id);

// The four canonical experiment setups:
//   E1  train/val/test within CFEE (by-image split), plain images
//   E2  train/val/test within RaFD (by-subject split), plain images
//   E3  train on the full CFEE, test on the full RaFD, plain images
//   E4  E3 with saliency-product images on both sides
struct ExperimentPreset {
    PresetId id;
    std::string train_dataset;  // "cfee" or "rafd"
    std::string test_dataset;
    SplitPolicy policy;
    SplitRatios ratios;
    // Exact split counts applied when the train dataset has this many samples
    // (the canonical CFEE split is specified by count, not ratio).
    std::optional<std::array<std::int64_t, 3>> exact_counts;
    std::int64_t exact_counts_total = 0;
    InputVariant variant;
    double reference_accuracy;  // published accuracy for this setup, percent
};

ExperimentPreset experiment_preset(PresetId id);

struct ExperimentPaths {
    std::filesystem::path cfee_root;
    std::filesystem::path rafd_root;
    std::filesystem::path out_dir;
    std::filesystem::path cascade_path;   // empty: default
    std::string saliency_backend = "spectral";
    NoFacePolicy on_no_face = NoFacePolicy::skip;
    int jobs = 1;
};

struct ExperimentResult {
    ConfusionMatrix cm;
    double accuracy = 0.0;  // percent, 2 decimals
    std::vector<EpochRecord> records;
    bool synthetic = false;
    std::filesystem::path summary_path;
    ReportFiles reports;
};

// Full pipeline for one preset: scan, split, preprocess, (saliency, product,)
// train, evaluate, report. Writes the model, stage manifests, report CSVs and
// a summary that cites the reference accuracy; runs on synthetic fixture data
// are watermarked as such and never presented as comparable.
ExperimentResult run_experiment(const ExperimentPreset& preset, const TrainConfig& config,
                                const ExperimentPaths& paths);

}  // namespace fer
