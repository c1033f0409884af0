#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fer/dataset.hpp"
#include "fer/image.hpp"
#include "fer/net.hpp"

namespace fer {

enum class LrDecay { linear, none };
enum class InputVariant { plain, saliency_product };

const char* to_string(LrDecay d);
const char* to_string(InputVariant v);
std::optional<LrDecay> parse_lr_decay(std::string_view s);
std::optional<InputVariant> parse_input_variant(std::string_view s);

struct TrainConfig {
    double base_lr = 0.01;
    int epochs = 100;
    LrDecay lr_decay = LrDecay::linear;
    int batch_size = 32;
    double momentum = 0.9;
    double weight_decay = 0.0;
    double dropout_p = 0.5;
    std::uint64_t seed = 0;
    InputVariant input_variant = InputVariant::plain;

    void validate() const;  // base_lr > 0, epochs >= 1, batch_size >= 1
};

// Flat key=value file, one field per line. Unknown keys are an error; missing
// keys keep their defaults.
TrainConfig parse_train_config(const std::filesystem::path& path);
void write_train_config(const TrainConfig& config, const std::filesystem::path& path);

// linear: base_lr * (1 - epoch/epochs); none: base_lr. Epoch outside
// [0, epochs) is an error.
double lr_schedule(const TrainConfig& config, int epoch);

struct EpochRecord {
    int epoch = 0;
    double lr = 0.0;
    double train_loss = 0.0;
    std::optional<double> val_loss;  // absent when the validation set is empty
    std::optional<double> val_acc;   // fraction in [0, 1]
    double seconds = 0.0;
};

// Columns: epoch, lr, train_loss, val_loss, val_acc, seconds. Optional fields
// are written empty.
void write_epoch_csv(const std::vector<EpochRecord>& records, const std::filesystem::path& path);

// Resolves a sample to its ready-to-train 256x256 grayscale image. The file
// store reads manifest paths from disk; tests substitute in-memory stores.
class ImageStore {
public:
    virtual ~ImageStore() = default;
    virtual bool exists(const ImageSample& sample) const = 0;
    virtual GrayImage load(const ImageSample& sample) const = 0;
};

class FileImageStore : public ImageStore {
public:
    bool exists(const ImageSample& sample) const override;
    GrayImage load(const ImageSample& sample) const override;
};

struct TrainResult {
    std::vector<EpochRecord> records;
    int best_epoch = -1;                   // highest validation accuracy (earliest on ties)
    std::vector<Tensor> best_state;        // parameters at best_epoch (final when no val set)
    double final_train_loss = 0.0;
    double final_train_acc = 0.0;
};

// SGD with momentum over manifest.train, one shuffle per epoch from the
// seeded generator. Computes the training-set input mean before the first
// epoch and stores it in the model. Deterministic for a fixed
// (seed, data, config) in single-worker mode.
TrainResult train(ClassifierModel& model, const SplitManifest& manifest, const TrainConfig& config,
                  const ImageStore& store);

}  // namespace fer
