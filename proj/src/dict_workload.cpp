#include "langbench/dict_workload.hpp"

namespace langbench {

std::string_view to_label(AdsKind kind) noexcept {
    return kind == AdsKind::HashMap ? "hash_map" : "tree_map";
}

Dictionary insert_all(AdsKind kind, const KeyValueWorkload& w) {
    if (kind == AdsKind::HashMap) return insert_all<HashDict>(w);
    return insert_all<TreeDict>(w);
}

std::size_t delete_all(Dictionary& d, const KeyValueWorkload& w) {
    return std::visit([&](auto& m) { return delete_all(m, w); }, d);
}

std::size_t dict_size(const Dictionary& d) noexcept {
    return std::visit([](const auto& m) { return m.size(); }, d);
}

}  // namespace langbench
