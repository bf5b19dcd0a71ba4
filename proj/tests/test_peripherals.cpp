#include <doctest.h>

#include <vector>

#include "simba/peripherals.hpp"
#include "simba/rng.hpp"

using namespace simba;
using namespace simba::periph;

TEST_CASE("bank reset clears every element and is idempotent") {
    PopcountBank bank(8);
    const std::vector<std::uint8_t> bits{1, 0, 1, 1, 0, 0, 1, 0};
    bank.accumulate(bits);
    CHECK(bank.count_high() == 4);
    bank.reset();
    CHECK(bank.count_high() == 0);
    CHECK(bank.accumulated() == 0);
    bank.reset();
    CHECK(bank.count_high() == 0);
}

TEST_CASE("bank construction rejects zero elements") {
    CHECK_THROWS_AS(PopcountBank(0), ConfigError);
}

TEST_CASE("accumulate latches ones positionally") {
    PopcountBank bank(100);
    std::vector<std::uint8_t> bits(100, 0);
    for (int i = 0; i < 40; ++i) bits[static_cast<std::size_t>(i)] = 1;
    bank.accumulate(bits);
    CHECK(bank.count_high() == 40);
    // all-zero input leaves the bank unchanged
    bank.accumulate(std::vector<std::uint8_t>(100, 0));
    CHECK(bank.count_high() == 40);
}

TEST_CASE("accumulating more bits than elements overflows") {
    PopcountBank bank(100);
    CHECK_THROWS_AS(bank.accumulate(std::vector<std::uint8_t>(101, 0)), OverCapacity);
}

TEST_CASE("comparator trips once on enough matching current") {
    PopcountBank bank(9);
    // 0 mismatches: all nine elements stay low.
    bank.accumulate(std::vector<std::uint8_t>(9, 0));
    ComparatorCell comp;
    CHECK(evaluate_and_read(bank, comp, 5) == 1);
    CHECK(comp.state == 0);
    // A tripped comparator cannot be reused without re-initialization.
    CHECK_THROWS_AS(evaluate_and_read(bank, comp, 5), UninitializedComparator);
}

TEST_CASE("nine mismatches fail a threshold of five") {
    PopcountBank bank(9);
    bank.accumulate(std::vector<std::uint8_t>(9, 1));
    ComparatorCell comp;
    CHECK(evaluate_and_read(bank, comp, 5) == 0);
    CHECK(comp.state == 1);
}

TEST_CASE("mismatch counting matches the threshold definition on the full grid") {
    // 100-bit compare: output must equal (100 - mismatches >= threshold) for
    // every (mismatches, threshold) pair.
    for (int m = 0; m <= 100; ++m) {
        PopcountBank bank(100);
        std::vector<std::uint8_t> bits(100, 0);
        for (int i = 0; i < m; ++i) bits[static_cast<std::size_t>(i)] = 1;
        bank.accumulate(bits);
        for (int t = 0; t <= 100; ++t) {
            ComparatorCell comp;
            const int expected = (100 - m >= t) ? 1 : 0;
            CAPTURE(m);
            CAPTURE(t);
            CHECK(evaluate_and_read(bank, comp, t) == expected);
        }
    }
}

TEST_CASE("threshold monotonicity: raising the threshold never flips 0 to 1") {
    PopcountBank bank(64);
    std::vector<std::uint8_t> bits(64, 0);
    for (int i = 0; i < 20; ++i) bits[static_cast<std::size_t>(i)] = 1;
    bank.accumulate(bits);
    int prev = 1;
    for (int t = 0; t <= 64; ++t) {
        ComparatorCell comp;
        const int out = evaluate_and_read(bank, comp, t);
        CHECK(out <= prev);
        prev = out;
    }
}

TEST_CASE("xnor/xor duality on random vectors") {
    SplitMix64 rng(0xD00D);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng.below(1024);
        std::vector<std::uint8_t> u(n), v(n);
        for (auto& b : u) b = static_cast<std::uint8_t>(rng.below(2));
        for (auto& b : v) b = static_cast<std::uint8_t>(rng.below(2));
        long long mismatches = 0, matches = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mismatches += (u[i] ^ v[i]);
            matches += (u[i] == v[i]);
        }
        CHECK(static_cast<long long>(n) - mismatches == matches);
        // Count through the bank protocol as well.
        PeripheralConfig cfg;
        BlockPopcounter counter(cfg);
        std::vector<std::uint8_t> x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = u[i] ^ v[i];
        CHECK(counter.count_ones(x) == mismatches);
    }
}

TEST_CASE("reset-evaluate idempotence") {
    std::vector<std::uint8_t> bits(50, 0);
    for (int i = 0; i < 17; ++i) bits[static_cast<std::size_t>(i)] = 1;
    PopcountBank bank(100);
    bank.accumulate(bits);
    ComparatorCell c1;
    const int first = evaluate_and_read(bank, c1, 30);
    bank.reset();
    bank.accumulate(bits);
    ComparatorCell c2;
    CHECK(evaluate_and_read(bank, c2, 30) == first);
}

TEST_CASE("popcount block cost model") {
    const PeripheralConfig cfg;
    const PopcountCost c100 = popcount_cost(100, cfg);
    CHECK(c100.energy_pj == doctest::Approx(7.5));
    CHECK(c100.latency_ns == doctest::Approx(10.0));
    const PopcountCost c1 = popcount_cost(1, cfg);
    CHECK(c1.energy_pj == doctest::Approx(7.5));  // one block minimum
    CHECK(c1.latency_ns == doctest::Approx(10.0));
    const PopcountCost c250 = popcount_cost(250, cfg);
    CHECK(c250.energy_pj == doctest::Approx(22.5));  // three blocks
    CHECK(c250.latency_ns == doctest::Approx(30.0));
    CHECK_THROWS_AS(popcount_cost(0, cfg), ConfigError);
}

TEST_CASE("block popcounter splits wide inputs and counts blocks") {
    PeripheralConfig cfg;
    BlockPopcounter counter(cfg);
    std::vector<std::uint8_t> bits(250, 0);
    for (std::size_t i = 0; i < bits.size(); i += 3) bits[i] = 1;
    const long long expected = static_cast<long long>((bits.size() + 2) / 3);
    CHECK(counter.count_ones(bits) == expected);
    CHECK(counter.blocks_used() == 3);
}
