#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "fer/emotion.hpp"
#include "fer/image.hpp"
#include "fer/tensor.hpp"

namespace fer {

using Logits = std::array<double, kEmotionCount>;
using Probabilities = std::array<double, kEmotionCount>;

// Exp-normalize with max subtraction. Sums to 1 within 1e-9 for any finite
// input; NaN input is an error.
Probabilities softmax(const Logits& logits);

// -ln(p[label]) with p floored at 1e-12 before the log.
double cross_entropy_loss(const Probabilities& probs, Emotion label);

enum class NetMode { train, eval };

// A backbone maps a normalized input batch to fixed-length feature vectors.
// The reference backbone also supports exact backpropagation; adapter
// backbones may be feature-only (frozen).
class Backbone {
public:
    virtual ~Backbone() = default;
    virtual std::string id() const = 0;
    virtual int feature_dim() const = 0;
    virtual std::vector<NamedTensor> tensors() = 0;
    virtual void init_params(std::uint64_t seed) = 0;
    // One row of `features` per batch image. Caches activations when
    // `mode == train` so a later backward() can run.
    virtual void forward(const std::vector<const GrayImage*>& batch, double input_mean,
                         NetMode mode, std::vector<std::vector<double>>& features) = 0;
    virtual bool supports_backward() const = 0;
    // d_features: dLoss/dFeatures per image; accumulates parameter gradients
    // into `grads` (keyed like tensors()).
    virtual void backward(const std::vector<std::vector<double>>& d_features,
                          std::map<std::string, Tensor>& grads) = 0;
    virtual void set_trainable(bool trainable) = 0;
};

// conv(8,7x7,s4) - relu - pool2 - conv(16,5x5) - relu - pool2 - fc(64) - relu.
// Shape chain for a 256x256 input:
//   1x256x256 -> 8x63x63 -> 8x31x31 -> 16x27x27 -> 16x13x13 -> 2704 -> 64
class ReferenceBackbone : public Backbone {
public:
    ReferenceBackbone();
    ~ReferenceBackbone() override;

    std::string id() const override { return "reference"; }
    int feature_dim() const override { return 64; }
    std::vector<NamedTensor> tensors() override;
    void init_params(std::uint64_t seed) override;
    void forward(const std::vector<const GrayImage*>& batch, double input_mean, NetMode mode,
                 std::vector<std::vector<double>>& features) override;
    bool supports_backward() const override { return true; }
    void backward(const std::vector<std::vector<double>>& d_features,
                  std::map<std::string, Tensor>& grads) override;
    void set_trainable(bool trainable) override;

    static std::vector<std::vector<int>> shape_chain();

    struct Impl;

private:
    std::unique_ptr<Impl> impl_;
};

using BackboneFactory =
    std::function<std::unique_ptr<Backbone>(const std::filesystem::path& weights_path)>;

// Registry. "reference" is built in and ignores the weights path (it is
// seed-initialized; trained parameters travel in the model archive).
void register_backbone(const std::string& id, BackboneFactory factory);
std::unique_ptr<Backbone> load_backbone(const std::string& id,
                                        const std::filesystem::path& weights_path = {});
std::vector<std::string> known_backbones();

struct ForwardBatch {
    std::vector<Logits> logits;
};

// Backbone + dropout + 7-way linear head. Class order is the canonical
// Emotion order.
class ClassifierModel {
public:
    explicit ClassifierModel(std::unique_ptr<Backbone> backbone, double dropout_p = 0.5);

    // Seeded He-normal weights, zero biases (head and backbone).
    void init_params(std::uint64_t seed);

    const std::string& backbone_id() const { return backbone_id_; }
    Backbone& backbone() { return *backbone_; }

    double dropout_p() const { return dropout_p_; }
    void set_dropout_p(double p);

    double input_mean() const { return input_mean_; }
    void set_input_mean(double m) { input_mean_ = m; }

    // Unique names: "backbone.*", "head.w", "head.b".
    std::vector<NamedTensor> named_tensors();
    std::int64_t parameter_count();

    void freeze_backbone();
    bool backbone_frozen() const { return backbone_frozen_; }

    // Deterministic in eval mode. In train mode the dropout mask is drawn from
    // `rng` (required) and activations are cached for backward().
    ForwardBatch forward(const std::vector<const GrayImage*>& batch, NetMode mode,
                         std::mt19937_64* rng = nullptr);

    // Mean cross-entropy loss over the cached batch plus gradients for every
    // trainable parameter. Must follow a train-mode forward of the same batch.
    struct BackwardResult {
        double loss = 0.0;
        std::map<std::string, Tensor> grads;
    };
    BackwardResult backward(const std::vector<Emotion>& labels);

    // Argmax prediction, ties broken toward the lowest class index.
    // `tie_count`, when given, is incremented once per tied argmax.
    Emotion predict(const Logits& logits, std::int64_t* tie_count = nullptr) const;

    std::vector<Tensor> snapshot_state();
    void restore_state(const std::vector<Tensor>& state);

    // Echoed into the model archive.
    std::map<std::string, std::string> config_echo;

private:
    std::unique_ptr<Backbone> backbone_;
    std::string backbone_id_;
    Tensor head_w_;  // 7 x feature_dim
    Tensor head_b_;  // 7
    bool head_trainable_ = true;
    bool backbone_frozen_ = false;
    double dropout_p_ = 0.5;
    double input_mean_ = 0.5;  // overwritten with the training-set mean by train()

    struct ForwardCache;
    std::unique_ptr<ForwardCache> cache_;

public:
    ~ClassifierModel();
    ClassifierModel(ClassifierModel&&) noexcept;
    ClassifierModel& operator=(ClassifierModel&&) noexcept;
};

// ReferenceBackbone + head, seeded.
ClassifierModel make_reference_model(std::uint64_t seed, double dropout_p = 0.5);

}  // namespace fer
