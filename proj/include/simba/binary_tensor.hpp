#ifndef SIMBA_BINARY_TENSOR_HPP
#define SIMBA_BINARY_TENSOR_HPP

#include <cstdint>
#include <vector>

#include "simba/errors.hpp"

namespace simba::bnn {

// Bit-packed (W, H, C) tensor. Flat bit index = (y*W + x)*C + c, i.e.
// row-major with the channel innermost; packing is LSB-first per word.
class BinaryTensor {
public:
    BinaryTensor() = default;
    BinaryTensor(int w, int h, int c);

    int width() const { return w_; }
    int height() const { return h_; }
    int channels() const { return c_; }
    std::size_t bit_count() const { return static_cast<std::size_t>(w_) * h_ * c_; }

    int get(int x, int y, int c) const { return get_flat(index(x, y, c)); }
    void set(int x, int y, int c, int v) { set_flat(index(x, y, c), v); }

    // Zero outside the tensor bounds (used for same-padding windows).
    int get_padded(int x, int y, int c) const {
        if (x < 0 || x >= w_ || y < 0 || y >= h_) return 0;
        return get(x, y, c);
    }

    int get_flat(std::size_t i) const {
        return static_cast<int>((words_[i >> 6] >> (i & 63)) & 1ULL);
    }
    void set_flat(std::size_t i, int v) {
        const std::uint64_t mask = 1ULL << (i & 63);
        if (v)
            words_[i >> 6] |= mask;
        else
            words_[i >> 6] &= ~mask;
    }

    long long popcount() const;

    bool operator==(const BinaryTensor& other) const = default;

private:
    std::size_t index(int x, int y, int c) const {
        return (static_cast<std::size_t>(y) * w_ + x) * c_ + c;
    }

    int w_ = 0, h_ = 0, c_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace simba::bnn

#endif  // SIMBA_BINARY_TENSOR_HPP
