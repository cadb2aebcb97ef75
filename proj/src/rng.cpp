#include "cssenv/rng.hpp"

#include <cmath>

namespace cssenv::rng {

namespace {
constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
constexpr double kTwoPi = 6.283185307179586476925286766559;
}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

Stream::Stream(std::uint64_t seed, std::uint64_t stream_id) noexcept
    : seed_(seed), stream_id_(stream_id), base_(mix64(seed ^ mix64(stream_id))) {}

std::uint64_t Stream::next_u64() noexcept {
    ++counter_;
    return mix64(base_ + counter_ * kGamma);
}

double Stream::next_unit() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Stream::next_unit_pos() noexcept {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double Stream::next_gaussian() noexcept {
    if (has_cached_gauss_) {
        has_cached_gauss_ = false;
        return cached_gauss_;
    }
    const double u1 = next_unit_pos();
    const double u2 = next_unit();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    cached_gauss_ = radius * std::sin(kTwoPi * u2);
    has_cached_gauss_ = true;
    return radius * std::cos(kTwoPi * u2);
}

}  // namespace cssenv::rng
