#ifndef SIMBA_DATASET_HPP
#define SIMBA_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simba/binary_tensor.hpp"

namespace simba::bnn {

struct LabeledImage {
    int label = 0;
    BinaryTensor pixels;  // binarized at mid-scale: byte >= 128 -> 1
};

struct Dataset {
    std::vector<LabeledImage> images;
};

// CIFAR-10 binary batch: 3073-byte records, 1 label byte + 3072 pixel bytes
// (three 1024-byte colour planes, row-major 32x32). `limit` < 0 loads all.
Dataset load_cifar10(const std::string& path, long long limit = -1);

// Two-class synthetic set in the same record format. Class 1 images are
// brightness-biased upward, class 0 downward; `bright_bias` is the shift of
// the per-pixel bright probability away from 1/2.
struct SyntheticParams {
    int count = 256;
    std::uint64_t seed = 1;
    double bright_bias = 0.08;
};

void write_synthetic_cifar(const std::string& path, const SyntheticParams& params);

}  // namespace simba::bnn

#endif  // SIMBA_DATASET_HPP
