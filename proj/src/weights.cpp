#include "simba/weights.hpp"

#include <algorithm>
#include <fstream>

namespace simba::bnn {

namespace {

constexpr char kMagic[4] = {'S', 'M', 'B', 'W'};
constexpr std::uint32_t kVersion = 1;

std::size_t parameterized_index(const BnnTopology& topo, std::size_t layer_index) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < layer_index; ++i)
        if (topo.layers()[i].kind != LayerKind::Maxpool) ++n;
    return n;
}

[[noreturn]] void fail_at(const std::string& path, std::size_t offset, const std::string& what) {
    throw ParseError("weights: " + path + " at byte offset " + std::to_string(offset) + ": " +
                     what);
}

}  // namespace

const LayerWeights& WeightSet::for_layer(const BnnTopology& topo, std::size_t layer_index) const {
    const LayerSpec& spec = topo.layers().at(layer_index);
    if (spec.kind == LayerKind::Maxpool)
        throw ShapeMismatch("weights: maxpool layer has no parameters");
    return layers.at(parameterized_index(topo, layer_index));
}

void WeightSet::validate(const BnnTopology& topo) const {
    std::size_t expect = 0;
    for (const LayerSpec& l : topo.layers())
        if (l.kind != LayerKind::Maxpool) ++expect;
    if (layers.size() != expect)
        throw ShapeMismatch("weights: " + std::to_string(layers.size()) + " entries for " +
                            std::to_string(expect) + " parameterized layers");
    std::size_t wi = 0;
    for (std::size_t i = 0; i < topo.layers().size(); ++i) {
        const LayerSpec& spec = topo.layers()[i];
        if (spec.kind == LayerKind::Maxpool) continue;
        const LayerWeights& lw = layers[wi++];
        const std::size_t bits =
            static_cast<std::size_t>(spec.out_features) * spec.window_bits();
        if (lw.kernel_bits.size() != bits)
            throw ShapeMismatch("weights: layer " + std::to_string(i) + " kernel bit count " +
                                std::to_string(lw.kernel_bits.size()) + " != " +
                                std::to_string(bits));
        if (lw.thresholds.size() != static_cast<std::size_t>(spec.out_features))
            throw ShapeMismatch("weights: layer " + std::to_string(i) + " threshold count");
        for (std::int32_t t : lw.thresholds)
            if (t < 0 || t > spec.window_bits())
                throw ShapeMismatch("weights: layer " + std::to_string(i) +
                                    " threshold outside [0, window_bits]");
    }
}

WeightSet load_smbw(const std::string& path, const BnnTopology& topo) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("weights: cannot open " + path);

    std::size_t offset = 0;
    auto read_bytes = [&](char* dst, std::size_t n, const char* what) {
        in.read(dst, static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(in.gcount()) != n)
            fail_at(path, offset, std::string("truncated while reading ") + what);
        offset += n;
    };

    char magic[4];
    read_bytes(magic, 4, "magic");
    if (magic[0] != kMagic[0] || magic[1] != kMagic[1] || magic[2] != kMagic[2] ||
        magic[3] != kMagic[3])
        fail_at(path, 0, "bad magic (expected \"SMBW\")");

    unsigned char vb[4];
    read_bytes(reinterpret_cast<char*>(vb), 4, "version");
    const std::uint32_t version = static_cast<std::uint32_t>(vb[0]) | (vb[1] << 8) |
                                  (vb[2] << 16) | (static_cast<std::uint32_t>(vb[3]) << 24);
    if (version != kVersion)
        fail_at(path, 4, "unsupported version " + std::to_string(version));

    WeightSet ws;
    for (std::size_t i = 0; i < topo.layers().size(); ++i) {
        const LayerSpec& spec = topo.layers()[i];
        if (spec.kind == LayerKind::Maxpool) continue;
        LayerWeights lw;
        const int wb = spec.window_bits();
        const std::size_t bytes_per_kernel = (static_cast<std::size_t>(wb) + 7) / 8;
        lw.kernel_bits.resize(static_cast<std::size_t>(spec.out_features) * wb);
        std::vector<char> packed(bytes_per_kernel);
        for (int o = 0; o < spec.out_features; ++o) {
            read_bytes(packed.data(), bytes_per_kernel,
                       ("layer " + std::to_string(i) + " kernel").c_str());
            for (int b = 0; b < wb; ++b)
                lw.kernel_bits[static_cast<std::size_t>(o) * wb + b] =
                    (static_cast<unsigned char>(packed[b >> 3]) >> (b & 7)) & 1;
        }
        lw.thresholds.resize(static_cast<std::size_t>(spec.out_features));
        for (int o = 0; o < spec.out_features; ++o) {
            unsigned char tb[4];
            read_bytes(reinterpret_cast<char*>(tb), 4,
                       ("layer " + std::to_string(i) + " threshold").c_str());
            lw.thresholds[static_cast<std::size_t>(o)] =
                static_cast<std::int32_t>(static_cast<std::uint32_t>(tb[0]) | (tb[1] << 8) |
                                          (tb[2] << 16) |
                                          (static_cast<std::uint32_t>(tb[3]) << 24));
        }
        ws.layers.push_back(std::move(lw));
    }

    char extra;
    in.read(&extra, 1);
    if (in.gcount() != 0) fail_at(path, offset, "trailing bytes after last layer");

    ws.validate(topo);
    return ws;
}

void save_smbw(const std::string& path, const BnnTopology& topo, const WeightSet& weights) {
    weights.validate(topo);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("weights: cannot write " + path);

    out.write(kMagic, 4);
    const unsigned char vb[4] = {kVersion & 0xFF, 0, 0, 0};
    out.write(reinterpret_cast<const char*>(vb), 4);

    std::size_t wi = 0;
    for (const LayerSpec& spec : topo.layers()) {
        if (spec.kind == LayerKind::Maxpool) continue;
        const LayerWeights& lw = weights.layers[wi++];
        const int wb = spec.window_bits();
        const std::size_t bytes_per_kernel = (static_cast<std::size_t>(wb) + 7) / 8;
        std::vector<unsigned char> packed(bytes_per_kernel);
        for (int o = 0; o < spec.out_features; ++o) {
            std::fill(packed.begin(), packed.end(), 0);
            for (int b = 0; b < wb; ++b)
                if (lw.kernel_bits[static_cast<std::size_t>(o) * wb + b])
                    packed[b >> 3] |= static_cast<unsigned char>(1u << (b & 7));
            out.write(reinterpret_cast<const char*>(packed.data()),
                      static_cast<std::streamsize>(bytes_per_kernel));
        }
        for (std::int32_t t : lw.thresholds) {
            const std::uint32_t u = static_cast<std::uint32_t>(t);
            const unsigned char tb[4] = {
                static_cast<unsigned char>(u & 0xFF), static_cast<unsigned char>((u >> 8) & 0xFF),
                static_cast<unsigned char>((u >> 16) & 0xFF),
                static_cast<unsigned char>((u >> 24) & 0xFF)};
            out.write(reinterpret_cast<const char*>(tb), 4);
        }
    }
    if (!out) throw ConfigError("weights: write failed for " + path);
}

}  // namespace simba::bnn
