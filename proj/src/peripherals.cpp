#include "simba/peripherals.hpp"

#include <algorithm>
#include <numeric>

namespace simba::periph {

void PeripheralConfig::validate() const {
    if (popcount_block_bits <= 0)
        throw ConfigError("peripherals: popcount_block_bits must be > 0");
    if (popcount_block_energy_pj < 0.0 || popcount_block_latency_ns < 0.0)
        throw ConfigError("peripherals: block costs must be >= 0");
}

PopcountBank::PopcountBank(int n) {
    if (n <= 0) throw ConfigError("PopcountBank: n must be > 0");
    states_.assign(static_cast<std::size_t>(n), 0);
}

void PopcountBank::reset() {
    std::fill(states_.begin(), states_.end(), std::uint8_t{0});
    accumulated_ = 0;
}

void PopcountBank::accumulate(std::span<const std::uint8_t> bits) {
    if (bits.size() > states_.size())
        throw OverCapacity("popcount_accumulate: " + std::to_string(bits.size()) +
                           " bits into a bank of " + std::to_string(states_.size()));
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) states_[i] = 1;
    accumulated_ = static_cast<int>(std::max<std::size_t>(accumulated_, bits.size()));
}

int PopcountBank::count_high() const {
    return static_cast<int>(std::count(states_.begin(), states_.end(), std::uint8_t{1}));
}

int evaluate_and_read(const PopcountBank& bank, ComparatorCell& comp, int match_threshold) {
    if (comp.state != 1)
        throw UninitializedComparator("evaluate_and_read: comparator not initialized to 1");
    comp.threshold_current_units = match_threshold;
    const int matches = bank.count_low();
    if (matches >= match_threshold) comp.state = 0;  // I_comp exceeded switching current
    return comp.state == 0 ? 1 : 0;
}

PopcountCost popcount_cost(long long n_bits, const PeripheralConfig& cfg) {
    cfg.validate();
    if (n_bits <= 0) throw ConfigError("popcount_cost: n_bits must be > 0");
    const long long blocks = (n_bits + cfg.popcount_block_bits - 1) / cfg.popcount_block_bits;
    return {static_cast<double>(blocks) * cfg.popcount_block_energy_pj,
            static_cast<double>(blocks) * cfg.popcount_block_latency_ns};
}

BlockPopcounter::BlockPopcounter(const PeripheralConfig& cfg)
    : cfg_(cfg), bank_(cfg.popcount_block_bits) {
    cfg_.validate();
}

long long BlockPopcounter::count_ones(std::span<const std::uint8_t> bits) {
    long long total = 0;
    std::size_t offset = 0;
    const std::size_t block = static_cast<std::size_t>(cfg_.popcount_block_bits);
    while (offset < bits.size()) {
        const std::size_t n = std::min(block, bits.size() - offset);
        bank_.reset();
        bank_.accumulate(bits.subspan(offset, n));
        total += bank_.count_high();
        ++blocks_used_;
        offset += n;
    }
    return total;
}

}  // namespace simba::periph
