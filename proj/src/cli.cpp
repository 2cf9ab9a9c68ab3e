#include "langbench/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include "langbench/harness.hpp"
#include "langbench/report.hpp"

#ifndef LANGBENCH_FIXTURE_DIR
#define LANGBENCH_FIXTURE_DIR "fixtures"
#endif

namespace langbench {

namespace {

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

// ---------------------------------------------------------------------------
// verify

struct FixtureFile {
    std::string name;
    std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
    std::vector<std::string> storage;
};

std::optional<FixtureFile> load_fixture(const std::filesystem::path& path, std::string_view header,
                                        std::size_t columns, std::ostream& out, VerifySummary& summary) {
    FixtureFile f;
    f.name = path.filename().string();
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        out << "FAIL " << f.name << ": cannot open " << path.string() << '\n';
        ++summary.checks;
        ++summary.failures;
        return std::nullopt;
    }
    std::string line;
    std::vector<std::size_t> line_nos;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != header) {
                out << "FAIL " << f.name << ":1 unexpected header\n";
                ++summary.checks;
                ++summary.failures;
                return std::nullopt;
            }
            continue;
        }
        if (line.empty()) continue;
        f.storage.push_back(line);
        line_nos.push_back(line_no);
    }
    for (std::size_t i = 0; i < f.storage.size(); ++i) {
        auto fields = split(f.storage[i], ',');
        if (fields.size() != columns) {
            out << "FAIL " << f.name << ':' << line_nos[i] << " expected " << columns << " fields\n";
            ++summary.checks;
            ++summary.failures;
            continue;
        }
        f.rows.emplace_back(line_nos[i], std::move(fields));
    }
    return f;
}

void report_check(std::ostream& out, VerifySummary& summary, const std::string& where, const std::string& what,
                  std::uint64_t expected, std::uint64_t actual) {
    ++summary.checks;
    if (expected == actual) {
        out << "ok   " << where << ' ' << what << ' ' << hex64(actual) << '\n';
    } else {
        ++summary.failures;
        out << "FAIL " << where << ' ' << what << " expected " << hex64(expected) << " got " << hex64(actual)
            << '\n';
    }
}

void report_bad_row(std::ostream& out, VerifySummary& summary, const std::string& where, const std::string& why) {
    ++summary.checks;
    ++summary.failures;
    out << "FAIL " << where << ' ' << why << '\n';
}

// ---------------------------------------------------------------------------
// analyze helpers

struct SeriesSource {
    std::vector<MeasurementRecord> records;
    std::string file;
};

SeriesSource load(const std::string& file) { return {parse_csv(std::filesystem::path(file)), file}; }

std::optional<std::string> resolve_component(const SeriesSource& src, const std::string& requested) {
    if (!requested.empty()) return requested;
    std::set<std::string> comps;
    for (const auto& r : src.records) comps.insert(r.component);
    if (comps.size() > 1)
        throw ConfigError(src.file + " holds several components; select one with a --component flag");
    return std::nullopt;
}

TimingSeries pick_series(const SeriesSource& src, std::string label, const std::string& component,
                         const char* flag) {
    if (label.empty()) {
        const auto labels = series_labels(src.records);
        if (labels.size() != 1)
            throw ConfigError(src.file + " holds " + std::to_string(labels.size()) + " series; select one with " +
                              flag);
        label = labels.front();
    }
    const auto comp = resolve_component(src, component);
    auto s = extract_series(src.records, label, comp ? std::optional<std::string_view>(*comp) : std::nullopt);
    if (s.points.empty()) throw ConfigError("series '" + label + "' not found in " + src.file);
    s.validate();
    return s;
}

std::string fmt_ns(double ns) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << ns;
    return os.str();
}

std::string fmt_ratio(const std::optional<double>& r) {
    if (!r) return "undefined";
    std::ostringstream os;
    os << std::fixed << std::setprecision(4) << *r;
    return os.str();
}

std::string_view winner_label(Winner w) {
    switch (w) {
        case Winner::A: return "a";
        case Winner::B: return "b";
        case Winner::Tie: return "tie";
    }
    return "?";
}

std::ofstream open_artifact(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

// ---------------------------------------------------------------------------
// subcommands

struct RunArgs {
    std::string family;
    std::string sizes;
    std::uint64_t probes = 10'000;
    std::uint64_t warmup = 0;
    std::string seed = "0";
    std::string thresholds;
    std::string out;
    std::string plot_dir;
    std::string component = "cpp";
};

int do_run(const RunArgs& a, std::ostream& out, std::ostream& err) {
    const auto family = parse_family(a.family);
    if (!family) throw ConfigError("unknown family '" + a.family + "' (sort-crossover, hybrid-sweep, dict-ops)");
    ExperimentConfig cfg = default_config(*family);
    if (!a.sizes.empty()) cfg.sizes = parse_grid(a.sizes);
    cfg.probes = a.probes;
    cfg.warmup = a.warmup;
    cfg.seed = parse_u64(a.seed);
    cfg.component = a.component;
    if (!a.thresholds.empty()) {
        if (*family != Family::HybridSweep) throw ConfigError("--thresholds only applies to hybrid-sweep");
        cfg.thresholds.clear();
        for (auto t : split(a.thresholds, ',')) {
            const auto v = parse_u64(t);
            if (v == 0 || v > UINT32_MAX) throw ConfigError("threshold out of range: " + std::string(t));
            cfg.thresholds.push_back(static_cast<std::uint32_t>(v));
        }
    }
    cfg.validate();

    const std::string out_path = a.out.empty() ? std::string(to_label(*family)) + ".csv" : a.out;
    CsvWriter writer(out_path);
    RunHooks hooks;
    hooks.on_record = [&](const MeasurementRecord& r) { writer.append(r); };

    std::vector<MeasurementRecord> records;
    try {
        records = run_experiment(cfg, hooks);
    } catch (const Error& e) {
        err << "error: " << e.what() << " (partial results kept in " << out_path << ")\n";
        return 1;
    }
    out << "wrote " << records.size() << " records to " << out_path << '\n';
    if (!a.plot_dir.empty()) {
        for (const auto& p : emit_plot_data(records, a.plot_dir)) out << "wrote " << p.string() << '\n';
    }
    err << "sink " << hex64(global_sink().value()) << '\n';
    return 0;
}

struct CrossoverArgs {
    std::string in, a, b, series_a, series_b, component, out;
};

int do_crossover(const CrossoverArgs& args, std::ostream& out) {
    SeriesSource src_a, src_b;
    std::string label_a = args.series_a, label_b = args.series_b;
    if (!args.in.empty()) {
        if (!args.a.empty() || !args.b.empty()) throw ConfigError("use either --in or --a/--b, not both");
        src_a = load(args.in);
        src_b = src_a;
        if (label_a.empty()) label_a = std::string(kInsertionSortLabel);
        if (label_b.empty()) label_b = std::string(kMergeSortLabel);
    } else {
        if (args.a.empty() || args.b.empty()) throw ConfigError("crossover needs --in, or both --a and --b");
        src_a = load(args.a);
        src_b = load(args.b);
    }
    const auto sa = pick_series(src_a, label_a, args.component, "--series-a");
    const auto sb = pick_series(src_b, label_b, args.component, "--series-b");
    const auto report = find_crossings(sa, sb);

    out << "crossings of " << sa.label << " vs " << sb.label << ": " << report.crossings.size() << '\n';
    for (const auto& c : report.crossings) out << "  between " << c.size_lo << " and " << c.size_hi << '\n';
    if (!args.out.empty()) {
        auto f = open_artifact(args.out);
        f << "size_lo,size_hi\n";
        for (const auto& c : report.crossings) f << c.size_lo << ',' << c.size_hi << '\n';
    }
    return 0;
}

struct BestKArgs {
    std::string in, component, out;
};

int do_best_k(const BestKArgs& args, std::ostream& out) {
    const auto src = load(args.in);
    const auto comp = resolve_component(src, args.component);
    std::map<std::uint32_t, std::string> labels;
    for (const auto& r : src.records)
        if (r.threshold_k && (!comp || r.component == *comp)) labels.emplace(*r.threshold_k, series_label(r));
    if (labels.empty()) throw ConfigError("no hybrid_sort records in " + src.file);

    std::vector<std::pair<std::uint32_t, TimingSeries>> by_k;
    for (const auto& [k, label] : labels)
        by_k.emplace_back(k, extract_series(src.records, label,
                                            comp ? std::optional<std::string_view>(*comp) : std::nullopt));
    const auto report = select_best_k(by_k);

    out << "rank  k      total_ns           wins  spike_ratio\n";
    std::size_t rank = 1;
    for (const auto& s : report.ranking) {
        out << std::left << std::setw(6) << rank++ << std::setw(7) << s.k << std::setw(19) << fmt_ns(s.total_ns)
            << std::setw(6) << s.wins << fmt_ratio(s.spike_ratio) << '\n';
    }
    out << std::right << "best K: " << report.best_k << '\n';
    if (!args.out.empty()) {
        auto f = open_artifact(args.out);
        f << "k,total_ns,wins,spike_ratio\n";
        for (const auto& s : report.ranking)
            f << s.k << ',' << fmt_ns(s.total_ns) << ',' << s.wins << ',' << fmt_ratio(s.spike_ratio) << '\n';
    }
    return 0;
}

struct CompareArgs {
    std::string a, b, series, component_a, component_b, out;
};

int do_compare(const CompareArgs& args, std::ostream& out) {
    const auto src_a = load(args.a);
    const auto src_b = load(args.b);
    std::vector<std::string> labels;
    if (!args.series.empty()) {
        labels.push_back(args.series);
    } else {
        const auto lb = series_labels(src_b.records);
        for (const auto& l : series_labels(src_a.records))
            if (std::find(lb.begin(), lb.end(), l) != lb.end()) labels.push_back(l);
        if (labels.empty()) throw ConfigError(args.a + " and " + args.b + " share no series");
    }

    std::optional<std::ofstream> artifact;
    if (!args.out.empty()) {
        artifact = open_artifact(args.out);
        *artifact << "series,size,a_ns,b_ns,ratio,winner\n";
    }
    for (const auto& label : labels) {
        const auto sa = pick_series(src_a, label, args.component_a, "--series");
        const auto sb = pick_series(src_b, label, args.component_b, "--series");
        const auto report = compare_series(sa, sb);
        out << "series " << label << " (a=" << args.a << ", b=" << args.b << ")\n";
        out << "  size        a_ns              b_ns              ratio      winner\n";
        for (const auto& row : report.rows) {
            out << "  " << std::left << std::setw(12) << row.size << std::setw(18) << fmt_ns(row.a_ns)
                << std::setw(18) << fmt_ns(row.b_ns) << std::setw(11) << fmt_ratio(row.ratio)
                << winner_label(row.winner) << std::right << '\n';
            if (artifact)
                *artifact << label << ',' << row.size << ',' << fmt_ns(row.a_ns) << ',' << fmt_ns(row.b_ns) << ','
                          << fmt_ratio(row.ratio) << ',' << winner_label(row.winner) << '\n';
        }
        out << "  a wins " << fmt_ratio(report.a_win_fraction) << " of sizes; geometric-mean ratio a/b "
            << fmt_ratio(report.geometric_mean) << '\n';
    }
    return 0;
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t parse_u64(std::string_view text) {
    int base = 10;
    std::string_view digits = text;
    if (digits.starts_with("0x") || digits.starts_with("0X")) {
        base = 16;
        digits.remove_prefix(2);
    }
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v, base);
    if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size())
        throw ConfigError("not an unsigned 64-bit integer: '" + std::string(text) + "'");
    return v;
}

std::vector<std::uint64_t> parse_grid(std::string_view spec) {
    std::vector<std::uint64_t> sizes;
    if (spec.find(':') != std::string_view::npos) {
        const auto parts = split(spec, ':');
        if (parts.size() != 3) throw ConfigError("grid must look like lo:hi:step, got '" + std::string(spec) + "'");
        const auto lo = parse_u64(parts[0]), hi = parse_u64(parts[1]), step = parse_u64(parts[2]);
        if (lo == 0 || step == 0 || hi < lo) throw ConfigError("grid needs 0 < lo <= hi and step > 0");
        for (std::uint64_t s = lo; s <= hi; s += step) {
            sizes.push_back(s);
            if (hi - s < step) break;
        }
    } else {
        for (auto part : split(spec, ',')) sizes.push_back(parse_u64(part));
    }
    if (sizes.empty()) throw ConfigError("empty grid");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] == 0) throw ConfigError("grid sizes must be positive");
        if (i > 0 && sizes[i] <= sizes[i - 1]) throw ConfigError("grid sizes must be strictly increasing");
    }
    return sizes;
}

std::filesystem::path default_fixture_dir() { return LANGBENCH_FIXTURE_DIR; }

VerifySummary verify_fixtures(const std::filesystem::path& dir, std::ostream& out) {
    VerifySummary summary;

    if (auto f = load_fixture(dir / "prng_known_answers.csv", "seed,index,u64_hex", 3, out, summary)) {
        for (const auto& [line, fields] : f->rows) {
            const std::string where = f->name + ":" + std::to_string(line);
            try {
                const auto seed = parse_u64(fields[0]);
                const auto index = parse_u64(fields[1]);
                const auto expected = parse_u64(fields[2]);
                SplitMix64 gen(seed);
                std::uint64_t v = 0;
                for (std::uint64_t i = 0; i <= index; ++i) v = gen.next_u64();
                report_check(out, summary, where,
                             "seed=" + std::to_string(seed) + " index=" + std::to_string(index), expected, v);
            } catch (const ConfigError& e) {
                report_bad_row(out, summary, where, e.what());
            }
        }
    }

    if (auto f = load_fixture(dir / "workload_checksums.csv", "kind,seed,n,xor_hex", 4, out, summary)) {
        for (const auto& [line, fields] : f->rows) {
            const std::string where = f->name + ":" + std::to_string(line);
            try {
                const auto seed = parse_u64(fields[1]);
                const auto n = parse_u64(fields[2]);
                const auto expected = parse_u64(fields[3]);
                SplitMix64 gen(seed);
                std::uint64_t actual = 0;
                if (fields[0] == "sort_vector") {
                    const auto v = make_sort_vector(gen, n);
                    actual = xor_checksum(std::span<const double>(v));
                } else if (fields[0] == "kv_keys" || fields[0] == "kv_values") {
                    const auto w = make_kv_workload(gen, n);
                    actual = fields[0] == "kv_keys" ? xor_checksum(std::span<const std::uint64_t>(w.keys))
                                                    : xor_checksum(std::span<const double>(w.values));
                } else {
                    report_bad_row(out, summary, where, "unknown kind '" + std::string(fields[0]) + "'");
                    continue;
                }
                report_check(out, summary, where,
                             std::string(fields[0]) + " seed=" + std::to_string(seed) + " n=" + std::to_string(n),
                             expected, actual);
            } catch (const ConfigError& e) {
                report_bad_row(out, summary, where, e.what());
            }
        }
    }

    if (auto f = load_fixture(dir / "probe_checksums.csv", "seed,family,size,probe,xor_hex", 5, out, summary)) {
        for (const auto& [line, fields] : f->rows) {
            const std::string where = f->name + ":" + std::to_string(line);
            try {
                const auto seed = parse_u64(fields[0]);
                const auto family = parse_family(fields[1]);
                if (!family) throw ConfigError("unknown family '" + std::string(fields[1]) + "'");
                const auto size = parse_u64(fields[2]);
                const auto probe = parse_u64(fields[3]);
                const auto expected = parse_u64(fields[4]);
                report_check(out, summary, where,
                             std::string(fields[1]) + " seed=" + std::to_string(seed) + " size=" +
                                 std::to_string(size) + " probe=" + std::to_string(probe),
                             expected, probe_input_checksum(seed, *family, size, probe));
            } catch (const ConfigError& e) {
                report_bad_row(out, summary, where, e.what());
            }
        }
    }

    out << "verify: " << summary.checks << " checks, " << summary.failures << " failures\n";
    return summary;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cross-language sorting and dictionary micro-benchmark harness", "langbench"};
    app.require_subcommand(1, 1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run one experiment family and write a CSV");
    run->add_option("--family", run_args.family, "sort-crossover | hybrid-sweep | dict-ops")->required();
    run->add_option("--sizes", run_args.sizes, "Size grid: lo:hi:step or a,b,c (default: family grid)");
    run->add_option("--probes", run_args.probes, "Timed probes per cell")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    run->add_option("--warmup", run_args.warmup, "Untimed probes per cell")->capture_default_str();
    run->add_option("--seed", run_args.seed, "Base seed (decimal or 0x hex)")->capture_default_str();
    run->add_option("--thresholds", run_args.thresholds, "Hybrid thresholds a,b,c (default 16,...,512)");
    run->add_option("--out", run_args.out, "Output CSV (default <family>.csv)");
    run->add_option("--plot-dir", run_args.plot_dir, "Also write plot tables into this directory");
    run->add_option("--component-label", run_args.component, "Value of the component column")
        ->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "Analyze result CSVs");
    analyze->require_subcommand(1, 1);

    CrossoverArgs cross_args;
    auto* cross = analyze->add_subcommand("crossover", "Grid intervals where two series swap order");
    cross->add_option("--in", cross_args.in, "One CSV holding both series");
    cross->add_option("--a", cross_args.a, "CSV with series a");
    cross->add_option("--b", cross_args.b, "CSV with series b");
    cross->add_option("--series-a", cross_args.series_a, "Series label for a (default insertion_sort with --in)");
    cross->add_option("--series-b", cross_args.series_b, "Series label for b (default merge_sort with --in)");
    cross->add_option("--component", cross_args.component, "Component to select");
    cross->add_option("--out", cross_args.out, "Write intervals as CSV");

    BestKArgs bestk_args;
    auto* bestk = analyze->add_subcommand("best-k", "Rank hybrid-sort thresholds");
    bestk->add_option("--in", bestk_args.in, "Hybrid-sweep CSV")->required();
    bestk->add_option("--component", bestk_args.component, "Component to select");
    bestk->add_option("--out", bestk_args.out, "Write ranking as CSV");

    CompareArgs cmp_args;
    auto* cmp = analyze->add_subcommand("compare", "Per-size ratio table between two result files");
    cmp->add_option("--a", cmp_args.a, "First CSV")->required();
    cmp->add_option("--b", cmp_args.b, "Second CSV")->required();
    cmp->add_option("--series", cmp_args.series, "Only this series label (default: all shared series)");
    cmp->add_option("--component-a", cmp_args.component_a, "Component to select from --a");
    cmp->add_option("--component-b", cmp_args.component_b, "Component to select from --b");
    cmp->add_option("--out", cmp_args.out, "Write ratio table as CSV");

    std::string fixture_dir = default_fixture_dir().string();
    auto* verify = app.add_subcommand("verify", "Check PRNG and input checksums against the golden fixtures");
    verify->add_option("--fixtures", fixture_dir, "Fixture directory")->capture_default_str();

    std::vector<const char*> argv{"langbench"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*run) return do_run(run_args, out, err);
        if (*cross) return do_crossover(cross_args, out);
        if (*bestk) return do_best_k(bestk_args, out);
        if (*cmp) return do_compare(cmp_args, out);
        if (*verify) return verify_fixtures(fixture_dir, out).ok() ? 0 : 1;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\nRun with --help for usage.\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace langbench
