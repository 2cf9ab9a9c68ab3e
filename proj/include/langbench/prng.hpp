#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace langbench {

/// SplitMix64 stream. The exact bit sequence is part of the cross-component
/// contract: every language port must reproduce it for the same seed.
///
/// Not synchronized; give each task its own generator.
class SplitMix64 {
public:
    static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;
    static constexpr std::uint64_t kMul1 = 0xBF58476D1CE4E5B9ULL;
    static constexpr std::uint64_t kMul2 = 0x94D049BB133111EBULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kIncrement;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * kMul1;
        z = (z ^ (z >> 27)) * kMul2;
        return z ^ (z >> 31);
    }

    /// Uniform double in [1.0, 65536.0).
    double next_value_f64() noexcept;

    constexpr std::uint64_t seed() const noexcept { return seed_; }
    constexpr std::uint64_t state() const noexcept { return state_; }

private:
    std::uint64_t seed_;
    std::uint64_t state_;
};

/// First output of a generator seeded with `x`; used as a stateless mixer.
constexpr std::uint64_t splitmix64_hash(std::uint64_t x) noexcept {
    return SplitMix64(x).next_u64();
}

inline constexpr double kValueLow = 1.0;
inline constexpr double kValueSpan = 65535.0;

/// Maps a raw 64-bit draw onto [1.0, 65536.0) using its top 53 bits.
/// The operation order is normative; do not "simplify" it.
constexpr double value_from_raw(std::uint64_t raw) noexcept {
    constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
    return kValueLow + (static_cast<double>(raw >> 11) * kTwoPowMinus53) * kValueSpan;
}

inline double SplitMix64::next_value_f64() noexcept { return value_from_raw(next_u64()); }

using SortVector = std::vector<double>;

struct KeyValueWorkload {
    std::vector<std::uint64_t> keys;
    std::vector<double> values;

    std::size_t size() const noexcept { return keys.size(); }
};

SortVector make_sort_vector(SplitMix64& gen, std::size_t n);

/// Keys are drawn first, then values. Reordering the draws changes every
/// downstream checksum.
KeyValueWorkload make_kv_workload(SplitMix64& gen, std::size_t n);

std::uint64_t bits_of(double x) noexcept;

// XOR of the raw bit patterns.
std::uint64_t xor_checksum(std::span<const double> values) noexcept;
std::uint64_t xor_checksum(std::span<const std::uint64_t> values) noexcept;
std::uint64_t xor_checksum(const KeyValueWorkload& w) noexcept;

}  // namespace langbench
