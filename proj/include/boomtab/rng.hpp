#pragma once

#include <cstdint>

namespace boomtab {

// Counter-based generator. Draw k of stream i under seed S is
//   mix(mix(S ^ mix(i + 1)) + (k + 1) * 0x9E3779B97F4A7C15)
// where mix is the SplitMix64 finalizer. Streams are independent of evaluation
// order, so parallel sweeps reproduce serial ones. See docs/formats.md.
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class CounterStream {
public:
    CounterStream(std::uint64_t seed, std::uint64_t stream)
        : base_(mix64(seed ^ mix64(stream + 1))) {}

    std::uint64_t next() { return mix64(base_ + (++k_) * kGolden); }

    // Multiply-shift reduction into [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // [1, bound)
    std::uint64_t nonzero_below(std::uint64_t bound) { return 1 + below(bound - 1); }

    bool coin(unsigned one_in) { return below(one_in) == 0; }

private:
    std::uint64_t base_;
    std::uint64_t k_ = 0;
};

}  // namespace boomtab
