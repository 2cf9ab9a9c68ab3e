#include "langbench/record.hpp"

#include <charconv>
#include <cstdio>

#include "langbench/error.hpp"

namespace langbench {

namespace {
__extension__ typedef unsigned __int128 u128;
}  // namespace

std::string_view to_label(Family f) noexcept {
    switch (f) {
        case Family::SortCrossover: return "sort-crossover";
        case Family::HybridSweep: return "hybrid-sweep";
        case Family::DictOps: return "dict-ops";
    }
    return "?";
}

std::string_view to_label(Operation op) noexcept { return op == Operation::Insert ? "insert" : "delete"; }

std::optional<Family> parse_family(std::string_view s) noexcept {
    for (auto f : {Family::SortCrossover, Family::HybridSweep, Family::DictOps})
        if (s == to_label(f)) return f;
    return std::nullopt;
}

std::optional<Operation> parse_operation(std::string_view s) noexcept {
    if (s == "insert") return Operation::Insert;
    if (s == "delete") return Operation::Delete;
    return std::nullopt;
}

std::uint64_t family_code(Family f) noexcept {
    switch (f) {
        case Family::SortCrossover: return 0;
        case Family::HybridSweep: return 1;
        case Family::DictOps: return 2;
    }
    return 0;
}

MeanNs MeanNs::from_total(std::uint64_t total_ns, std::uint64_t count) {
    if (count == 0) throw std::invalid_argument("MeanNs::from_total: zero count");
    const std::uint64_t whole = total_ns / count;
    const std::uint64_t rem = total_ns % count;
    // rem < count, so rem * 1000 only overflows for absurd probe counts.
    const u128 scaled = static_cast<u128>(rem) * 1000U;
    std::uint64_t frac = static_cast<std::uint64_t>(scaled / count);
    const std::uint64_t frac_rem = static_cast<std::uint64_t>(scaled % count);
    const u128 twice = static_cast<u128>(frac_rem) * 2U;
    std::uint64_t milli = whole * 1000 + frac;
    if (twice > count || (twice == count && (milli & 1U) != 0)) ++milli;
    return MeanNs(milli);
}

std::string MeanNs::to_string() const {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%llu.%03llu", static_cast<unsigned long long>(milli_ / 1000),
                  static_cast<unsigned long long>(milli_ % 1000));
    return buf;
}

std::optional<MeanNs> MeanNs::parse(std::string_view s) noexcept {
    const auto dot = s.find('.');
    if (dot == std::string_view::npos || dot == 0 || s.size() - dot - 1 != 3) return std::nullopt;
    std::uint64_t whole = 0, frac = 0;
    const auto w = s.substr(0, dot);
    const auto f = s.substr(dot + 1);
    auto r1 = std::from_chars(w.data(), w.data() + w.size(), whole);
    if (r1.ec != std::errc{} || r1.ptr != w.data() + w.size()) return std::nullopt;
    auto r2 = std::from_chars(f.data(), f.data() + f.size(), frac);
    if (r2.ec != std::errc{} || r2.ptr != f.data() + f.size()) return std::nullopt;
    if (whole > (UINT64_MAX - 999) / 1000) return std::nullopt;
    return MeanNs(whole * 1000 + frac);
}

std::string series_label(const MeasurementRecord& r) {
    std::string label = r.algorithm;
    if (r.threshold_k) label += "_k" + std::to_string(*r.threshold_k);
    if (r.operation) {
        label += '_';
        label += to_label(*r.operation);
    }
    return label;
}

void validate(const MeasurementRecord& r) {
    const bool hybrid = r.algorithm == kHybridSortLabel;
    if (hybrid != r.threshold_k.has_value())
        throw ConfigError("threshold_k must be present exactly when algorithm is hybrid_sort");
    if (r.threshold_k && *r.threshold_k == 0) throw ConfigError("threshold_k must be positive");
    if ((r.family == Family::DictOps) != r.operation.has_value())
        throw ConfigError("operation must be present exactly when family is dict-ops");
    if (r.size == 0) throw ConfigError("size must be positive");
    if (r.probes == 0) throw ConfigError("probes must be positive");
    if (r.component.empty() || r.algorithm.empty()) throw ConfigError("component and algorithm must be non-empty");
    for (std::string_view field : {std::string_view(r.component), std::string_view(r.algorithm)})
        if (field.find_first_of(",\n\r") != std::string_view::npos)
            throw ConfigError("field contains a comma or line break: " + std::string(field));
}

}  // namespace langbench
