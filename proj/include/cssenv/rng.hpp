#pragma once

#include <cstdint>

namespace cssenv::rng {

// SplitMix64 finalizer; full-period bijection on 64-bit words.
std::uint64_t mix64(std::uint64_t z) noexcept;

// Counter-based generator: the i-th output of stream s under seed k is
// mix64(base(k, s) + (i+1) * GAMMA), so any (seed, stream, counter) triple
// can be reproduced without replaying the sequence. Parallel sweeps assign
// disjoint stream ids and stay bit-deterministic regardless of scheduling.
class Stream {
public:
    Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept;

    std::uint64_t next_u64() noexcept;
    double next_unit() noexcept;      // uniform in [0, 1), 53-bit resolution
    double next_unit_pos() noexcept;  // uniform in (0, 1]
    double next_gaussian() noexcept;  // standard normal (Box-Muller pair, cached)
    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t base_;
    std::uint64_t counter_ = 0;
    double cached_gauss_ = 0.0;
    bool has_cached_gauss_ = false;
};

}  // namespace cssenv::rng
