#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "langbench/error.hpp"
#include "langbench/record.hpp"

namespace langbench {

// ---------------------------------------------------------------------------
// CSV interchange

inline constexpr std::string_view kCsvHeader = "family,component,algorithm,threshold_k,operation,size,probes,mean_ns";

std::string to_csv_row(const MeasurementRecord& r);
MeasurementRecord parse_csv_row(std::string_view line, const std::string& file, std::size_t line_no);

/// Appends rows and flushes after each one so an aborted run keeps its data.
class CsvWriter {
public:
    explicit CsvWriter(std::filesystem::path path);
    void append(const MeasurementRecord& r);
    const std::filesystem::path& path() const noexcept { return path_; }

private:
    std::filesystem::path path_;
    std::ofstream out_;
};

void write_csv(std::span<const MeasurementRecord> records, const std::filesystem::path& path);
std::vector<MeasurementRecord> parse_csv(std::istream& in, const std::string& name);
std::vector<MeasurementRecord> parse_csv(const std::filesystem::path& path);

// ---------------------------------------------------------------------------
// Series

struct SeriesPoint {
    std::uint64_t size = 0;
    double mean_ns = 0.0;
};

struct TimingSeries {
    std::string label;
    std::vector<SeriesPoint> points;

    /// Throws ConfigError if empty or sizes are not strictly increasing.
    void validate() const;
};

/// Records whose series_label() equals `label` (and, if given, whose
/// component matches), ordered by size.
TimingSeries extract_series(std::span<const MeasurementRecord> records, std::string_view label,
                            std::optional<std::string_view> component = std::nullopt);

/// Distinct series labels in first-seen order.
std::vector<std::string> series_labels(std::span<const MeasurementRecord> records);

// ---------------------------------------------------------------------------
// Crossings

struct CrossingInterval {
    std::uint64_t size_lo = 0;
    std::uint64_t size_hi = 0;
    bool operator==(const CrossingInterval&) const = default;
};

struct CrossingReport {
    std::vector<CrossingInterval> crossings;
};

/// Grid intervals where sign(a - b) flips. A zero difference keeps the sign
/// of the previous point; leading zeros take the sign of the first non-zero
/// difference.
CrossingReport find_crossings(const TimingSeries& a, const TimingSeries& b);

// ---------------------------------------------------------------------------
// Best threshold

struct KScore {
    std::uint32_t k = 0;
    double total_ns = 0.0;
    std::size_t wins = 0;     // grid points where this K is the pointwise minimum
    double spike_ratio = 1.0; // max/min of the series' ratio to the minimum envelope
};

struct BestKReport {
    std::uint32_t best_k = 0;
    std::vector<KScore> ranking;  // ascending total, ties toward smaller K
};

BestKReport select_best_k(std::span<const std::pair<std::uint32_t, TimingSeries>> series_by_k);

// ---------------------------------------------------------------------------
// Pairwise comparison

enum class Winner { A, B, Tie };

struct RatioRow {
    std::uint64_t size = 0;
    double a_ns = 0.0;
    double b_ns = 0.0;
    std::optional<double> ratio;  // a / b; empty when b is zero
    Winner winner = Winner::Tie;
};

struct ComparisonReport {
    std::vector<RatioRow> rows;
    double a_win_fraction = 0.0;          // ties count half
    std::optional<double> geometric_mean; // over defined ratios
};

ComparisonReport compare_series(const TimingSeries& a, const TimingSeries& b);

// ---------------------------------------------------------------------------
// Plot data

/// Writes whitespace-delimited tables into `dir`, one per compared group:
/// `<family>.dat` for the sort families and `dict-ops_<ads>_<op>.dat` for
/// dictionaries. Returns the files written.
std::vector<std::filesystem::path> emit_plot_data(std::span<const MeasurementRecord> records,
                                                  const std::filesystem::path& dir);

}  // namespace langbench
