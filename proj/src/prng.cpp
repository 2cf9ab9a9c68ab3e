#include "langbench/prng.hpp"

#include <bit>

namespace langbench {

SortVector make_sort_vector(SplitMix64& gen, std::size_t n) {
    SortVector v(n);
    for (auto& x : v) x = gen.next_value_f64();
    return v;
}

KeyValueWorkload make_kv_workload(SplitMix64& gen, std::size_t n) {
    KeyValueWorkload w;
    w.keys.resize(n);
    w.values.resize(n);
    for (auto& k : w.keys) k = gen.next_u64();
    for (auto& v : w.values) v = gen.next_value_f64();
    return w;
}

std::uint64_t bits_of(double x) noexcept { return std::bit_cast<std::uint64_t>(x); }

std::uint64_t xor_checksum(std::span<const double> values) noexcept {
    std::uint64_t acc = 0;
    for (double v : values) acc ^= bits_of(v);
    return acc;
}

std::uint64_t xor_checksum(std::span<const std::uint64_t> values) noexcept {
    std::uint64_t acc = 0;
    for (auto v : values) acc ^= v;
    return acc;
}

std::uint64_t xor_checksum(const KeyValueWorkload& w) noexcept {
    return xor_checksum(std::span<const std::uint64_t>(w.keys)) ^
           xor_checksum(std::span<const double>(w.values));
}

}  // namespace langbench
