#include "simba/binary_tensor.hpp"

#include <bit>

namespace simba::bnn {

BinaryTensor::BinaryTensor(int w, int h, int c) : w_(w), h_(h), c_(c) {
    if (w <= 0 || h <= 0 || c <= 0)
        throw ShapeMismatch("BinaryTensor: dimensions must be positive");
    words_.assign((bit_count() + 63) / 64, 0);
}

long long BinaryTensor::popcount() const {
    long long n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

}  // namespace simba::bnn
