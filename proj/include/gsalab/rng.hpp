#pragma once

#include <cstdint>

namespace gsalab {

// SplitMix64 finalizer (Steele, Lea & Flood 2014; same mixer as
// java.util.SplittableRandom and the xoshiro seeding routine).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Counter-based uniform generator: draw k of stream `seed` is
//   mix64(seed + (k+1) * 0x9E3779B97F4A7C15)
// which is exactly the SplitMix64 sequence started at state `seed`.
// Doubles are the top 53 bits scaled to [0,1). The counter form gives
// random access: draw(k) is a pure function of (seed, k), so parallel
// kernels can read the same values a sequential consumer would see.
// Generator and mapping are fixed; serialized results depend on them.
class CounterRng {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    // Draw at absolute index, without consuming.
    double at(std::uint64_t index) const noexcept {
        return to_unit(mix64(seed_ + (index + 1) * kGamma));
    }

    // Next draw in the stream; consumes one index.
    double uniform01() noexcept { return at(consumed_++); }

    // Mark `count` draws as consumed (used after indexed parallel reads).
    void skip(std::uint64_t count) noexcept { consumed_ += count; }

    std::uint64_t consumed() const noexcept { return consumed_; }
    std::uint64_t seed() const noexcept { return seed_; }

    static constexpr double to_unit(std::uint64_t u) noexcept {
        return static_cast<double>(u >> 11) * 0x1.0p-53;
    }

private:
    std::uint64_t seed_;
    std::uint64_t consumed_ = 0;
};

// Deterministic seed derivation: fold one 64-bit key into a base seed.
// Chained by the harness as mix_seed(mix_seed(base, problem), repetition)
// (paired mode; the strategy index is folded in between for independent
// mode). Documented in the README; fixed per release.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t key) noexcept {
    return mix64(base ^ ((key + 1) * CounterRng::kGamma));
}

} // namespace gsalab
