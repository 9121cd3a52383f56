#pragma once

#include <cstdint>

namespace ncfrieze {

// splitmix64/v1: the fixed generator behind every seeded operation. Chosen
// over <random> engines because std::uniform_int_distribution is not
// bit-stable across standard libraries and generated fixtures are golden.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive. Plain modulo: the bias is irrelevant for
    // sampling, determinism is not.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<long>(next() % span);
    }

    // Derives an independent stream for sub-task `index` of this seed.
    static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
        SplitMix64 mixer(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
        return SplitMix64(mixer.next());
    }

private:
    std::uint64_t state_;
};

}  // namespace ncfrieze
