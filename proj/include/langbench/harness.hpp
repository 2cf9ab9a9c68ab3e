#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "langbench/algorithms.hpp"
#include "langbench/dict_workload.hpp"
#include "langbench/error.hpp"
#include "langbench/prng.hpp"
#include "langbench/record.hpp"

namespace langbench {

struct ExperimentConfig {
    Family family = Family::SortCrossover;
    std::vector<std::uint64_t> sizes;
    std::uint64_t probes = 10'000;
    std::uint64_t warmup = 0;
    std::uint64_t seed = 0;
    std::vector<std::uint32_t> thresholds;  // hybrid-sweep only
    std::string component = "cpp";

    /// Throws ConfigError on an empty or non-increasing grid, zero probes,
    /// zero thresholds or a label that cannot go into a CSV field.
    void validate() const;
};

std::vector<std::uint64_t> default_sizes(Family f);
std::vector<std::uint32_t> default_thresholds();
ExperimentConfig default_config(Family f);

enum class Algorithm { InsertionSort, MergeSort, HybridSort, HashMap, OrderedTreeMap };

/// One column of the experiment grid.
struct Cell {
    Algorithm algorithm = Algorithm::MergeSort;
    std::optional<std::uint32_t> threshold_k;
    std::optional<Operation> operation;
};

std::string_view to_label(Algorithm a) noexcept;

/// Cells of a family in grid order.
std::vector<Cell> cells_for(const ExperimentConfig& cfg);

// ---------------------------------------------------------------------------
// Inputs

/// seed XOR mix(family, size, probe), where mix chains splitmix64_hash over
/// the family code, then the size, then the probe index.
std::uint64_t probe_seed(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe) noexcept;

SortVector sort_probe_input(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe);
KeyValueWorkload dict_probe_input(std::uint64_t seed, std::uint64_t size, std::uint64_t probe);

/// XOR checksum of the input a probe would see.
std::uint64_t probe_input_checksum(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe);

// ---------------------------------------------------------------------------
// Timing

/// Accumulates one value per probe so the optimizer cannot discard the timed
/// work. The value is printed when a run ends.
class ResultSink {
public:
    void consume(std::uint64_t bits) noexcept {
        acc_ = acc_ * 0x100000001B3ULL ^ bits;
    }
    void consume(double x) noexcept { consume(bits_of(x)); }
    std::uint64_t value() const noexcept { return acc_; }

private:
    volatile std::uint64_t acc_ = 0xCBF29CE484222325ULL;
};

ResultSink& global_sink() noexcept;

using Clock = std::chrono::steady_clock;
static_assert(Clock::is_steady);

/// Converts a clock delta to nanoseconds; throws ClockError if negative.
std::uint64_t checked_duration_ns(Clock::time_point start, Clock::time_point stop);

/// Times `op()` between two clock reads. Whatever `op` returns is destroyed
/// after the second read and handed to `consume`.
template <typename Op, typename Consume>
std::uint64_t time_probe(Op&& op, Consume&& consume) {
    const auto start = Clock::now();
    auto result = op();
    const auto stop = Clock::now();
    const auto ns = checked_duration_ns(start, stop);
    consume(result);
    return ns;
}

template <typename Op>
std::uint64_t time_probe(Op&& op) {
    const auto start = Clock::now();
    op();
    const auto stop = Clock::now();
    return checked_duration_ns(start, stop);
}

struct ProbeTrace {
    std::uint64_t probe = 0;
    std::uint64_t input_checksum = 0;
    std::uint64_t duration_ns = 0;
};

struct RunHooks {
    /// Called after each measured probe. Setting it costs an input checksum
    /// per probe, computed outside the timed region.
    std::function<void(const ProbeTrace&)> on_probe;
    /// Called as soon as each record is complete.
    std::function<void(const MeasurementRecord&)> on_record;
};

MeasurementRecord run_cell(const ExperimentConfig& cfg, const Cell& cell, std::uint64_t size,
                           const RunHooks& hooks = {});

/// Runs every cell at every size, size-major, on the calling thread.
std::vector<MeasurementRecord> run_experiment(const ExperimentConfig& cfg, const RunHooks& hooks = {});

}  // namespace langbench
