#pragma once

#include <cstdint>
#include <random>

namespace tailscope {

// splitmix64 finalizer; good avalanche, cheap.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Counter-based stream derivation: replicate r of a run seeded with
// `master` gets its own generator seed, so replicates are independent
// and results do not depend on scheduling order.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t replicate) {
    return mix64(master + 0x9e3779b97f4a7c15ULL * (replicate + 1));
}

// One RNG stream per (master_seed, replicate_index). Uniform doubles are
// produced from the raw 64-bit output directly, so the stream is
// bit-reproducible independent of the standard library's distribution
// implementations.
class RngStream {
public:
    RngStream(std::uint64_t master_seed, std::uint64_t replicate_index)
        : gen_(stream_seed(master_seed, replicate_index)) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on the open interval (0,1); never returns 0 or 1, so log()
    // and inverse-cdf transforms are safe.
    double u01() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace tailscope
