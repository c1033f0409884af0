#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace fer {

// Dense double-precision tensor. Training math runs in doubles so the
// finite-difference gradient checks have headroom; the on-disk model format
// stores float32.
struct Tensor {
    std::vector<int> shape;
    std::vector<double> v;

    static Tensor zeros(std::vector<int> shape);

    std::int64_t size() const { return static_cast<std::int64_t>(v.size()); }
};

struct NamedTensor {
    std::string name;
    Tensor* tensor = nullptr;
    bool trainable = true;
};

}  // namespace fer
