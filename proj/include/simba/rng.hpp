#ifndef SIMBA_RNG_HPP
#define SIMBA_RNG_HPP

#include <cstdint>
#include <initializer_list>

namespace simba {

// Counter-based splittable generator (splitmix64 core). Every consumer
// derives its own stream from the master seed plus a tag path, so the
// order of evaluation and any parallel scheduling never change results.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n), n > 0. Rejection keeps the distribution exact.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    // Uniform in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double unit() {  // [0, 1)
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Derives an independent stream for (seed, tag path). Tags identify the
// consumer, e.g. {rate_index, trial, image, layer}.
inline SplitMix64 derive_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
    SplitMix64 mix(seed);
    std::uint64_t s = mix.next();
    for (std::uint64_t t : tags) {
        SplitMix64 step(s ^ (t + 0x9E3779B97F4A7C15ULL));
        s = step.next();
    }
    return SplitMix64(s);
}

}  // namespace simba

#endif  // SIMBA_RNG_HPP
