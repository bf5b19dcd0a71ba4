#include "simba/topology.hpp"

#include <fstream>

#include <json.hpp>

namespace simba::bnn {

using nlohmann::json;

const char* to_string(LayerKind k) {
    switch (k) {
        case LayerKind::BinConv: return "binconv";
        case LayerKind::Maxpool: return "maxpool";
        case LayerKind::FullyConn: return "fullyconn";
    }
    return "?";
}

int LayerSpec::window_bits() const {
    switch (kind) {
        case LayerKind::BinConv: return kw * kh * in_features;
        case LayerKind::FullyConn: return in_features;
        case LayerKind::Maxpool: return 0;
    }
    return 0;
}

BnnTopology::BnnTopology(InputShape input, std::vector<LayerSpec> layers)
    : input_(input), layers_(std::move(layers)) {
    validate();
}

BnnTopology BnnTopology::resolve(InputShape input, const std::vector<LayerParams>& params) {
    if (input.w <= 0 || input.h <= 0 || input.c <= 0)
        throw ConfigError("topology: input shape must be positive");
    std::vector<LayerSpec> layers;
    int w = input.w, h = input.h, c = input.c;
    bool flattened = false;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const LayerParams& p = params[i];
        LayerSpec spec;
        spec.kind = p.kind;
        const std::string where = "topology: layer " + std::to_string(i);
        switch (p.kind) {
            case LayerKind::BinConv:
                if (flattened) throw ConfigError(where + ": binconv after fullyconn");
                if (p.out_features <= 0 || p.kw <= 0 || p.kh <= 0)
                    throw ConfigError(where + ": binconv needs out_features, kernel_w, kernel_h");
                spec.w = w;
                spec.h = h;
                spec.in_features = c;
                spec.out_features = p.out_features;
                spec.kw = p.kw;
                spec.kh = p.kh;
                c = p.out_features;
                break;
            case LayerKind::Maxpool:
                if (flattened) throw ConfigError(where + ": maxpool after fullyconn");
                if (w % 2 != 0 || h % 2 != 0)
                    throw OddDimensions(where + ": maxpool input " + std::to_string(w) + "x" +
                                        std::to_string(h) + " is not even");
                w /= 2;
                h /= 2;
                spec.w = w;
                spec.h = h;
                spec.in_features = c;
                spec.out_features = c;
                break;
            case LayerKind::FullyConn:
                if (p.out_features <= 0)
                    throw ConfigError(where + ": fullyconn needs out_features");
                spec.in_features = w * h * c;
                spec.out_features = p.out_features;
                spec.w = 1;
                spec.h = 1;
                w = 1;
                h = 1;
                c = p.out_features;
                flattened = true;
                break;
        }
        layers.push_back(spec);
    }
    return BnnTopology(input, std::move(layers));
}

void BnnTopology::validate() const {
    if (layers_.empty()) throw ConfigError("topology: no layers");
    int w = input_.w, h = input_.h, c = input_.c;
    for (std::size_t i = 0; i < layers_.size(); ++i) {
        const LayerSpec& l = layers_[i];
        const std::string where = "topology: layer " + std::to_string(i);
        switch (l.kind) {
            case LayerKind::BinConv:
                if (l.w != w || l.h != h || l.in_features != c)
                    throw ShapeMismatch(where + ": binconv shape does not chain");
                if (l.kw <= 0 || l.kh <= 0 || l.out_features <= 0)
                    throw ConfigError(where + ": binconv dimensions must be positive");
                c = l.out_features;
                break;
            case LayerKind::Maxpool:
                if (w % 2 != 0 || h % 2 != 0) throw OddDimensions(where + ": odd maxpool input");
                if (l.w != w / 2 || l.h != h / 2 || l.in_features != c || l.out_features != c)
                    throw ShapeMismatch(where + ": maxpool shape does not chain");
                w = l.w;
                h = l.h;
                break;
            case LayerKind::FullyConn:
                if (l.in_features != w * h * c)
                    throw ShapeMismatch(where + ": fullyconn input width does not chain");
                if (l.out_features <= 0) throw ConfigError(where + ": fullyconn needs outputs");
                w = 1;
                h = 1;
                c = l.out_features;
                break;
        }
    }
}

namespace {

LayerKind kind_from_string(const std::string& s, const std::string& where) {
    if (s == "binconv") return LayerKind::BinConv;
    if (s == "maxpool") return LayerKind::Maxpool;
    if (s == "fullyconn") return LayerKind::FullyConn;
    throw ConfigError(where + ": unknown layer kind '" + s + "'");
}

}  // namespace

BnnTopology BnnTopology::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("topology: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("topology: " + path + ": " + e.what());
    }
    try {
        InputShape input{j.at("input").at("width").get<int>(),
                         j.at("input").at("height").get<int>(),
                         j.at("input").at("channels").get<int>()};
        std::vector<LayerParams> params;
        for (const auto& jl : j.at("layers")) {
            LayerParams p{};
            p.kind = kind_from_string(jl.at("kind").get<std::string>(), path);
            if (p.kind != LayerKind::Maxpool) p.out_features = jl.at("out_features").get<int>();
            if (p.kind == LayerKind::BinConv) {
                p.kw = jl.at("kernel_w").get<int>();
                p.kh = jl.at("kernel_h").get<int>();
            }
            params.push_back(p);
        }
        return resolve(input, params);
    } catch (const json::exception& e) {
        throw ParseError("topology: " + path + ": " + e.what());
    }
}

void BnnTopology::to_json_file(const std::string& path) const {
    json j;
    j["input"] = {{"width", input_.w}, {"height", input_.h}, {"channels", input_.c}};
    j["layers"] = json::array();
    for (const LayerSpec& l : layers_) {
        json jl;
        jl["kind"] = to_string(l.kind);
        if (l.kind != LayerKind::Maxpool) jl["out_features"] = l.out_features;
        if (l.kind == LayerKind::BinConv) {
            jl["kernel_w"] = l.kw;
            jl["kernel_h"] = l.kh;
        }
        j["layers"].push_back(jl);
    }
    std::ofstream out(path);
    if (!out) throw ConfigError("topology: cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace simba::bnn
