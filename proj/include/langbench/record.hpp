#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace langbench {

enum class Family { SortCrossover, HybridSweep, DictOps };
enum class Operation { Insert, Delete };

std::string_view to_label(Family f) noexcept;
std::string_view to_label(Operation op) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;
std::optional<Operation> parse_operation(std::string_view s) noexcept;

/// Stable small integer used when deriving per-probe seeds.
std::uint64_t family_code(Family f) noexcept;

inline constexpr std::string_view kInsertionSortLabel = "insertion_sort";
inline constexpr std::string_view kMergeSortLabel = "merge_sort";
inline constexpr std::string_view kHybridSortLabel = "hybrid_sort";

/// Mean duration in thousandths of a nanosecond, the resolution of the CSV
/// column. Keeping it integral makes CSV round trips exact.
class MeanNs {
public:
    constexpr MeanNs() = default;
    static constexpr MeanNs from_milli(std::uint64_t milli) noexcept { return MeanNs(milli); }

    /// total / count rounded half-to-even to three fractional digits.
    static MeanNs from_total(std::uint64_t total_ns, std::uint64_t count);

    constexpr std::uint64_t milli() const noexcept { return milli_; }
    constexpr double ns() const noexcept { return static_cast<double>(milli_) / 1000.0; }

    /// Fixed-point text, e.g. "1234.500".
    std::string to_string() const;
    static std::optional<MeanNs> parse(std::string_view s) noexcept;

    constexpr auto operator<=>(const MeanNs&) const = default;

private:
    explicit constexpr MeanNs(std::uint64_t milli) noexcept : milli_(milli) {}
    std::uint64_t milli_ = 0;
};

struct MeasurementRecord {
    Family family = Family::SortCrossover;
    std::string component;
    std::string algorithm;
    std::optional<std::uint32_t> threshold_k;
    std::optional<Operation> operation;
    std::uint64_t size = 0;
    std::uint64_t probes = 0;
    MeanNs mean_ns;

    bool operator==(const MeasurementRecord&) const = default;
};

/// Name of the timing series a record belongs to, e.g. "merge_sort",
/// "hybrid_sort_k128" or "hash_map_insert". The component is not included.
std::string series_label(const MeasurementRecord& r);

/// Throws ConfigError when threshold_k/operation presence does not match the
/// algorithm and family.
void validate(const MeasurementRecord& r);

}  // namespace langbench
