// Self-contained deterministic RNG (splitmix64). std:: distributions are not
// portable across standard libraries; reproducibility contracts need bit-stable
// streams, including per-member substreams for parallel sweeps.
#pragma once

#include <cstdint>

namespace polystab {

struct splitmix64 {
    std::uint64_t state = 0;

    explicit splitmix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [lo, hi]; modulo bias is immaterial at our spans (<2^20)
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        const std::uint64_t span = hi - lo + 1;
        return lo + next() % span;
    }
};

// Substream seed for member `index` of a sweep driven by `master`.
inline std::uint64_t member_seed(std::uint64_t master, std::uint64_t index) {
    splitmix64 g(master ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
    return g.next();
}

}  // namespace polystab
