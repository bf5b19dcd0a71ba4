#ifndef SIMBA_TOPOLOGY_HPP
#define SIMBA_TOPOLOGY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simba/errors.hpp"

namespace simba::bnn {

enum class LayerKind : std::uint8_t { BinConv, Maxpool, FullyConn };

const char* to_string(LayerKind k);

// Resolved layer descriptor. `w`/`h` are the OUTPUT feature-map dimensions
// (BinConv preserves them via zero-padding; Maxpool halves its input).
struct LayerSpec {
    LayerKind kind = LayerKind::BinConv;
    int w = 0;
    int h = 0;
    int in_features = 0;   // IF
    int out_features = 0;  // OF
    int kw = 0;            // BinConv only
    int kh = 0;
    static constexpr int pool = 2;  // Maxpool filter is fixed at 2x2

    // kw*kh*IF for BinConv, IF for FullyConn; the bit width one
    // popcount/threshold evaluation sees.
    int window_bits() const;
};

struct InputShape {
    int w = 0;
    int h = 0;
    int c = 0;
};

class BnnTopology {
public:
    BnnTopology() = default;
    BnnTopology(InputShape input, std::vector<LayerSpec> layers);

    // Builder used by the JSON loader and tests: resolves per-layer shapes by
    // chaining from the input. Throws on inconsistent chains.
    struct LayerParams {
        LayerKind kind;
        int out_features = 0;  // BinConv / FullyConn
        int kw = 0, kh = 0;    // BinConv
    };
    static BnnTopology resolve(InputShape input, const std::vector<LayerParams>& params);

    static BnnTopology from_json_file(const std::string& path);
    void to_json_file(const std::string& path) const;

    const InputShape& input() const { return input_; }
    const std::vector<LayerSpec>& layers() const { return layers_; }
    std::size_t layer_count() const { return layers_.size(); }

    void validate() const;

private:
    InputShape input_{};
    std::vector<LayerSpec> layers_;
};

}  // namespace simba::bnn

#endif  // SIMBA_TOPOLOGY_HPP
