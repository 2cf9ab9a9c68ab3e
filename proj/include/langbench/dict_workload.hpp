#pragma once

#include <cstdint>
#include <map>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "langbench/prng.hpp"

namespace langbench {

enum class AdsKind { HashMap, OrderedTreeMap };

std::string_view to_label(AdsKind kind) noexcept;

using HashDict = std::unordered_map<std::uint64_t, double>;
using TreeDict = std::map<std::uint64_t, double>;
using Dictionary = std::variant<HashDict, TreeDict>;

template <typename Map>
concept KeyedDict = requires(Map m, std::uint64_t k, double v) {
    m.insert_or_assign(k, v);
    { m.erase(k) } -> std::convertible_to<std::size_t>;
};

/// Loop insertion with insert-or-replace semantics. No capacity reservation.
template <KeyedDict Map>
Map insert_all(const KeyValueWorkload& w) {
    Map m;
    for (std::size_t i = 0; i < w.keys.size(); ++i) m.insert_or_assign(w.keys[i], w.values[i]);
    return m;
}

/// Erases every key of `w` one by one. Returns how many erasures were
/// no-ops (repeated keys).
template <KeyedDict Map>
std::size_t delete_all(Map& m, const KeyValueWorkload& w) {
    std::size_t absent = 0;
    for (auto k : w.keys) absent += (m.erase(k) == 0);
    return absent;
}

Dictionary insert_all(AdsKind kind, const KeyValueWorkload& w);
std::size_t delete_all(Dictionary& d, const KeyValueWorkload& w);
std::size_t dict_size(const Dictionary& d) noexcept;

}  // namespace langbench
