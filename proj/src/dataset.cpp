#include "simba/dataset.hpp"

#include <fstream>

#include "simba/rng.hpp"

namespace simba::bnn {

namespace {
constexpr int kSide = 32;
constexpr int kChannels = 3;
constexpr std::size_t kPixelBytes = kSide * kSide * kChannels;  // 3072
constexpr std::size_t kRecordBytes = kPixelBytes + 1;           // 3073
}  // namespace

Dataset load_cifar10(const std::string& path, long long limit) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("dataset: cannot open " + path);
    in.seekg(0, std::ios::end);
    const auto size = static_cast<std::size_t>(in.tellg());
    in.seekg(0);
    if (size == 0 || size % kRecordBytes != 0)
        throw ParseError("dataset: " + path + " size " + std::to_string(size) +
                         " is not a multiple of 3073-byte records");

    long long records = static_cast<long long>(size / kRecordBytes);
    if (limit >= 0 && limit < records) records = limit;

    Dataset ds;
    ds.images.reserve(static_cast<std::size_t>(records));
    std::vector<unsigned char> rec(kRecordBytes);
    for (long long r = 0; r < records; ++r) {
        in.read(reinterpret_cast<char*>(rec.data()), kRecordBytes);
        if (static_cast<std::size_t>(in.gcount()) != kRecordBytes)
            throw ParseError("dataset: " + path + " truncated at record " + std::to_string(r));
        LabeledImage img;
        img.label = rec[0];
        img.pixels = BinaryTensor(kSide, kSide, kChannels);
        for (int c = 0; c < kChannels; ++c)
            for (int y = 0; y < kSide; ++y)
                for (int x = 0; x < kSide; ++x) {
                    const unsigned char byte = rec[1 + (c * kSide + y) * kSide + x];
                    img.pixels.set(x, y, c, byte >= 128 ? 1 : 0);
                }
        ds.images.push_back(std::move(img));
    }
    return ds;
}

void write_synthetic_cifar(const std::string& path, const SyntheticParams& params) {
    if (params.count <= 0) throw ConfigError("synthetic dataset: count must be > 0");
    if (params.bright_bias < 0.0 || params.bright_bias >= 0.5)
        throw ConfigError("synthetic dataset: bright_bias must be in [0, 0.5)");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("synthetic dataset: cannot write " + path);

    std::vector<unsigned char> rec(kRecordBytes);
    for (int i = 0; i < params.count; ++i) {
        SplitMix64 rng = derive_stream(params.seed, {static_cast<std::uint64_t>(i)});
        const int label = static_cast<int>(rng.below(2));
        const double p_bright = 0.5 + (label == 1 ? params.bright_bias : -params.bright_bias);
        rec[0] = static_cast<unsigned char>(label);
        for (std::size_t p = 0; p < kPixelBytes; ++p) {
            const bool bright = rng.unit() < p_bright;
            // Keep bytes well clear of the 128 binarization threshold.
            const unsigned char base = bright ? 160 : 64;
            rec[1 + p] = static_cast<unsigned char>(base + rng.below(64));
        }
        out.write(reinterpret_cast<const char*>(rec.data()), kRecordBytes);
    }
    if (!out) throw ConfigError("synthetic dataset: write failed for " + path);
}

}  // namespace simba::bnn
