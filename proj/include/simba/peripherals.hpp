#ifndef SIMBA_PERIPHERALS_HPP
#define SIMBA_PERIPHERALS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "simba/errors.hpp"

namespace simba::periph {

struct PeripheralConfig {
    int popcount_block_bits = 100;
    double popcount_block_energy_pj = 7.5;
    double popcount_block_latency_ns = 10.0;

    void validate() const;
};

struct PopcountCost {
    double energy_pj = 0.0;
    double latency_ns = 0.0;
};

// Bank of n SOT-MTJ elements. Reset drives every element to the low
// resistance state (0); a positive input pulse on element i flips it high.
class PopcountBank {
public:
    explicit PopcountBank(int n);

    int size() const { return static_cast<int>(states_.size()); }
    int accumulated() const { return accumulated_; }

    void reset();
    void accumulate(std::span<const std::uint8_t> bits);

    // Number of high-resistance elements (= ones among the latched bits).
    int count_high() const;
    // Low-resistance elements among the latched positions; this is what
    // feeds current into the comparator.
    int count_low() const { return accumulated_ - count_high(); }

    std::uint8_t state(int i) const { return states_[static_cast<std::size_t>(i)]; }

private:
    std::vector<std::uint8_t> states_;
    int accumulated_ = 0;
};

// Single SOT-MTJ whose threshold switching current is expressed in units of
// low-resistance popcount elements. Starts high (1) and trips at most once.
struct ComparatorCell {
    int state = 1;
    int threshold_current_units = 0;
};

// Comparator evaluation for the XOR-mismatch protocol: the bank holds
// mismatch bits; low-resistance elements correspond to matches and drive
// I_comp. Returns 1 iff matches >= match_threshold.
int evaluate_and_read(const PopcountBank& bank, ComparatorCell& comp, int match_threshold);

// Block cost model: one bank pass per ceil(n_bits / block) block, blocks of
// one logical popcount reuse the same bank serially.
PopcountCost popcount_cost(long long n_bits, const PeripheralConfig& cfg);

// Digital orchestration of a popcount wider than one bank: feeds blocks
// through the bank, accumulating the high count between blocks.
class BlockPopcounter {
public:
    explicit BlockPopcounter(const PeripheralConfig& cfg);

    // Count of 1s across the whole bit sequence.
    long long count_ones(std::span<const std::uint8_t> bits);

    long long blocks_used() const { return blocks_used_; }

private:
    PeripheralConfig cfg_;
    PopcountBank bank_;
    long long blocks_used_ = 0;
};

}  // namespace simba::periph

#endif  // SIMBA_PERIPHERALS_HPP
