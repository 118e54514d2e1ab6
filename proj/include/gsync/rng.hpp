#pragma once

#include <bit>
#include <cstdint>

namespace gsync {

// splitmix64 finalizer; full 64-bit avalanche.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Counter-based random stream. Substreams are derived by hashing tags into
// the state, so any (seed, index) pair names the same stream no matter in
// which order streams are created or consumed. That keeps per-edge and
// per-vertex sampling order-independent and safe to parallelize.
class RngStream {
public:
    static RngStream from_seed(std::uint64_t seed) noexcept {
        return RngStream(mix64(seed ^ 0xA0761D6478BD642Full));
    }

    // Independent substream identified by an integer tag.
    RngStream child(std::uint64_t tag) const noexcept {
        return RngStream(mix64(state_ + mix64(tag ^ 0xE7037ED1A0B428DBull)));
    }

    std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform01() noexcept {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform in [0, n); n > 0. Multiply-shift reduction; the bias is of
    // order n / 2^64 and irrelevant at simulation scale.
    std::uint32_t uniform_below(std::uint32_t n) noexcept {
        return static_cast<std::uint32_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

private:
    explicit RngStream(std::uint64_t state) noexcept : state_(state) {}
    std::uint64_t state_;
};

// Stream for one Monte Carlo trial, keyed by everything that identifies the
// cell: master seed, instance size, flip probability (by bit pattern) and
// trial index.
inline RngStream make_trial_stream(std::uint64_t master_seed, std::uint64_t n,
                                   double flip_prob, std::uint64_t trial) noexcept {
    return RngStream::from_seed(master_seed)
        .child(n)
        .child(std::bit_cast<std::uint64_t>(flip_prob))
        .child(trial);
}

} // namespace gsync
