#include "langbench/harness.hpp"

#include <algorithm>

namespace langbench {

namespace {

std::vector<std::uint64_t> arithmetic_grid(std::uint64_t lo, std::uint64_t hi, std::uint64_t step) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t s = lo; s <= hi; s += step) out.push_back(s);
    return out;
}

template <typename Map>
std::uint64_t time_insert(const KeyValueWorkload& w, ResultSink& sink) {
    return time_probe([&] { return insert_all<Map>(w); },
                      [&](const Map& m) { sink.consume(static_cast<std::uint64_t>(m.size())); });
}

template <typename Map>
std::uint64_t time_delete(const KeyValueWorkload& w, ResultSink& sink) {
    Map m = insert_all<Map>(w);
    return time_probe([&] { return delete_all(m, w); },
                      [&](std::size_t absent) { sink.consume(static_cast<std::uint64_t>(absent + m.size())); });
}

std::uint64_t time_sort(const Cell& cell, SortVector& v, ResultSink& sink) {
    std::span<double> data(v);
    std::uint64_t ns = 0;
    switch (cell.algorithm) {
        case Algorithm::InsertionSort: ns = time_probe([&] { insertion_sort(data); }); break;
        case Algorithm::MergeSort: ns = time_probe([&] { merge_sort(data); }); break;
        case Algorithm::HybridSort: {
            const HybridConfig hc{cell.threshold_k.value_or(0)};
            ns = time_probe([&] { hybrid_sort(data, hc); });
            break;
        }
        default: throw ConfigError("not a sorting cell");
    }
    if (!v.empty()) sink.consume(v[v.size() / 2]);
    return ns;
}

std::uint64_t time_dict(const Cell& cell, const KeyValueWorkload& w, ResultSink& sink) {
    const bool insert = cell.operation.value_or(Operation::Insert) == Operation::Insert;
    switch (cell.algorithm) {
        case Algorithm::HashMap: return insert ? time_insert<HashDict>(w, sink) : time_delete<HashDict>(w, sink);
        case Algorithm::OrderedTreeMap:
            return insert ? time_insert<TreeDict>(w, sink) : time_delete<TreeDict>(w, sink);
        default: throw ConfigError("not a dictionary cell");
    }
}

/// Generates the probe's input, then times only the operation under test.
std::uint64_t one_probe(const ExperimentConfig& cfg, const Cell& cell, std::uint64_t size, std::uint64_t probe,
                        std::uint64_t* checksum) {
    auto& sink = global_sink();
    if (cfg.family == Family::DictOps) {
        const auto w = dict_probe_input(cfg.seed, size, probe);
        if (checksum) *checksum = xor_checksum(w);
        return time_dict(cell, w, sink);
    }
    auto v = sort_probe_input(cfg.seed, cfg.family, size, probe);
    if (checksum) *checksum = xor_checksum(std::span<const double>(v));
    return time_sort(cell, v, sink);
}

}  // namespace

void ExperimentConfig::validate() const {
    if (sizes.empty()) throw ConfigError("size grid is empty");
    if (sizes.front() == 0) throw ConfigError("sizes must be positive");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1]) throw ConfigError("size grid must be strictly increasing");
    if (probes == 0) throw ConfigError("probes must be >= 1");
    if (family == Family::HybridSweep) {
        if (thresholds.empty()) throw ConfigError("hybrid-sweep needs at least one threshold");
        for (auto k : thresholds)
            if (k == 0) throw ConfigError("thresholds must be >= 1");
    }
    if (component.empty() || component.find_first_of(",\n\r") != std::string::npos)
        throw ConfigError("component label must be non-empty and contain no comma or line break");
}

std::vector<std::uint64_t> default_sizes(Family f) {
    switch (f) {
        case Family::SortCrossover: return arithmetic_grid(25, 1000, 25);
        case Family::HybridSweep: return arithmetic_grid(250, 10'000, 250);
        case Family::DictOps: return arithmetic_grid(100, 10'000, 100);
    }
    return {};
}

std::vector<std::uint32_t> default_thresholds() { return {16, 32, 64, 128, 256, 512}; }

ExperimentConfig default_config(Family f) {
    ExperimentConfig cfg;
    cfg.family = f;
    cfg.sizes = default_sizes(f);
    if (f == Family::HybridSweep) cfg.thresholds = default_thresholds();
    return cfg;
}

std::string_view to_label(Algorithm a) noexcept {
    switch (a) {
        case Algorithm::InsertionSort: return kInsertionSortLabel;
        case Algorithm::MergeSort: return kMergeSortLabel;
        case Algorithm::HybridSort: return kHybridSortLabel;
        case Algorithm::HashMap: return to_label(AdsKind::HashMap);
        case Algorithm::OrderedTreeMap: return to_label(AdsKind::OrderedTreeMap);
    }
    return "?";
}

std::vector<Cell> cells_for(const ExperimentConfig& cfg) {
    std::vector<Cell> cells;
    switch (cfg.family) {
        case Family::SortCrossover:
            cells.push_back({Algorithm::InsertionSort, {}, {}});
            cells.push_back({Algorithm::MergeSort, {}, {}});
            break;
        case Family::HybridSweep:
            for (auto k : cfg.thresholds) cells.push_back({Algorithm::HybridSort, k, {}});
            cells.push_back({Algorithm::MergeSort, {}, {}});
            cells.push_back({Algorithm::InsertionSort, {}, {}});
            break;
        case Family::DictOps:
            for (auto a : {Algorithm::HashMap, Algorithm::OrderedTreeMap})
                for (auto op : {Operation::Insert, Operation::Delete}) cells.push_back({a, {}, op});
            break;
    }
    return cells;
}

std::uint64_t probe_seed(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe) noexcept {
    std::uint64_t h = splitmix64_hash(family_code(family));
    h = splitmix64_hash(h ^ size);
    h = splitmix64_hash(h ^ probe);
    return seed ^ h;
}

SortVector sort_probe_input(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe) {
    SplitMix64 gen(probe_seed(seed, family, size, probe));
    return make_sort_vector(gen, size);
}

KeyValueWorkload dict_probe_input(std::uint64_t seed, std::uint64_t size, std::uint64_t probe) {
    SplitMix64 gen(probe_seed(seed, Family::DictOps, size, probe));
    return make_kv_workload(gen, size);
}

std::uint64_t probe_input_checksum(std::uint64_t seed, Family family, std::uint64_t size, std::uint64_t probe) {
    if (family == Family::DictOps) return xor_checksum(dict_probe_input(seed, size, probe));
    const auto v = sort_probe_input(seed, family, size, probe);
    return xor_checksum(std::span<const double>(v));
}

ResultSink& global_sink() noexcept {
    static ResultSink sink;
    return sink;
}

std::uint64_t checked_duration_ns(Clock::time_point start, Clock::time_point stop) {
    const auto ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
    if (ns < 0) throw ClockError("monotonic clock went backwards (" + std::to_string(ns) + " ns)");
    return static_cast<std::uint64_t>(ns);
}

MeasurementRecord run_cell(const ExperimentConfig& cfg, const Cell& cell, std::uint64_t size,
                           const RunHooks& hooks) {
    // Warmup probes reuse the probe-0 input; measured probes are numbered from 1.
    for (std::uint64_t i = 0; i < cfg.warmup; ++i) one_probe(cfg, cell, size, 0, nullptr);

    std::uint64_t total = 0;
    for (std::uint64_t p = 1; p <= cfg.probes; ++p) {
        ProbeTrace trace{p, 0, 0};
        trace.duration_ns = one_probe(cfg, cell, size, p, hooks.on_probe ? &trace.input_checksum : nullptr);
        total += trace.duration_ns;
        if (hooks.on_probe) hooks.on_probe(trace);
    }

    MeasurementRecord rec;
    rec.family = cfg.family;
    rec.component = cfg.component;
    rec.algorithm = std::string(to_label(cell.algorithm));
    rec.threshold_k = cell.threshold_k;
    rec.operation = cell.operation;
    rec.size = size;
    rec.probes = cfg.probes;
    rec.mean_ns = MeanNs::from_total(total, cfg.probes);
    return rec;
}

std::vector<MeasurementRecord> run_experiment(const ExperimentConfig& cfg, const RunHooks& hooks) {
    cfg.validate();
    const auto cells = cells_for(cfg);
    std::vector<MeasurementRecord> records;
    records.reserve(cells.size() * cfg.sizes.size());
    for (auto size : cfg.sizes) {
        for (const auto& cell : cells) {
            records.push_back(run_cell(cfg, cell, size, hooks));
            if (hooks.on_record) hooks.on_record(records.back());
        }
    }
    return records;
}

}  // namespace langbench
