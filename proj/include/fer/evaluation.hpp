#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "fer/dataset.hpp"
#include "fer/net.hpp"
#include "fer/trainer.hpp"

namespace fer {

// 7x7 count grid, rows = true class, columns = predicted class, canonical
// Emotion order.
struct ConfusionMatrix {
    std::array<std::array<std::int64_t, kEmotionCount>, kEmotionCount> counts{};
    std::int64_t total = 0;

    void add(Emotion truth, Emotion predicted);
    std::int64_t row_sum(int row) const;
    std::int64_t trace() const;

    bool operator==(const ConfusionMatrix&) const = default;
};

// Round half up to 2 decimals (table formatting).
double round2(double value);

// diag/row_sum per class as percentages rounded to 2 decimals; classes with
// an empty row are undefined (nullopt), never a number.
std::array<std::optional<double>, kEmotionCount> per_class_accuracy(const ConfusionMatrix& cm);

// trace/total as a percentage rounded to 2 decimals. Empty matrix is an error.
double overall_accuracy(const ConfusionMatrix& cm);

struct EvalResult {
    ConfusionMatrix cm;
    std::int64_t argmax_ties = 0;
};

// Eval-mode argmax over every sample. Missing artifacts are reported all at
// once before any inference runs. Parallel across images when jobs > 1
// (per-shard matrices merged in shard order).
EvalResult evaluate(ClassifierModel& model, const std::vector<ImageSample>& samples,
                    const ImageStore& store, int jobs = 1);

// 8x8 CSV (corner + class labels, then one row per true class) plus an
// appended per_class_accuracy row ("n/a" for undefined classes).
void write_confusion_csv(const ConfusionMatrix& cm, const std::filesystem::path& path);
ConfusionMatrix parse_confusion_csv(const std::filesystem::path& path);

void write_per_class_csv(const ConfusionMatrix& cm, const std::filesystem::path& path);

}  // namespace fer
