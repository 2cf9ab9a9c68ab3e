#include "langbench/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace langbench {

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

template <typename Int>
std::optional<Int> parse_uint(std::string_view s) {
    Int v{};
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

void require_same_grid(const TimingSeries& a, const TimingSeries& b) {
    a.validate();
    b.validate();
    if (a.points.size() != b.points.size())
        throw ConfigError("series '" + a.label + "' and '" + b.label + "' have different grids");
    for (std::size_t i = 0; i < a.points.size(); ++i)
        if (a.points[i].size != b.points[i].size)
            throw ConfigError("series '" + a.label + "' and '" + b.label + "' differ at grid point " +
                              std::to_string(i));
}

int sign_of(double d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

}  // namespace

// ---------------------------------------------------------------------------

std::string to_csv_row(const MeasurementRecord& r) {
    std::string row;
    row += to_label(r.family);
    row += ',';
    row += r.component;
    row += ',';
    row += r.algorithm;
    row += ',';
    if (r.threshold_k) row += std::to_string(*r.threshold_k);
    row += ',';
    if (r.operation) row += to_label(*r.operation);
    row += ',';
    row += std::to_string(r.size);
    row += ',';
    row += std::to_string(r.probes);
    row += ',';
    row += r.mean_ns.to_string();
    return row;
}

MeasurementRecord parse_csv_row(std::string_view line, const std::string& file, std::size_t line_no) {
    const auto fields = split_commas(line);
    if (fields.size() != 8)
        throw ParseError(file, line_no, "expected 8 fields, found " + std::to_string(fields.size()));

    MeasurementRecord r;
    const auto family = parse_family(fields[0]);
    if (!family) throw ParseError(file, line_no, "unknown family '" + std::string(fields[0]) + "'");
    r.family = *family;
    r.component = std::string(fields[1]);
    r.algorithm = std::string(fields[2]);
    if (!fields[3].empty()) {
        auto k = parse_uint<std::uint32_t>(fields[3]);
        if (!k) throw ParseError(file, line_no, "bad threshold_k '" + std::string(fields[3]) + "'");
        r.threshold_k = *k;
    }
    if (!fields[4].empty()) {
        auto op = parse_operation(fields[4]);
        if (!op) throw ParseError(file, line_no, "bad operation '" + std::string(fields[4]) + "'");
        r.operation = *op;
    }
    auto size = parse_uint<std::uint64_t>(fields[5]);
    if (!size) throw ParseError(file, line_no, "bad size '" + std::string(fields[5]) + "'");
    r.size = *size;
    auto probes = parse_uint<std::uint64_t>(fields[6]);
    if (!probes) throw ParseError(file, line_no, "bad probes '" + std::string(fields[6]) + "'");
    r.probes = *probes;
    auto mean = MeanNs::parse(fields[7]);
    if (!mean) throw ParseError(file, line_no, "bad mean_ns '" + std::string(fields[7]) + "'");
    r.mean_ns = *mean;

    try {
        validate(r);
    } catch (const ConfigError& e) {
        throw ParseError(file, line_no, e.what());
    }
    return r;
}

CsvWriter::CsvWriter(std::filesystem::path path) : path_(std::move(path)) {
    out_.open(path_, std::ios::binary | std::ios::trunc);
    if (!out_) throw IoError("cannot open '" + path_.string() + "' for writing");
    out_ << kCsvHeader << '\n';
    out_.flush();
    if (!out_) throw IoError("write failed: '" + path_.string() + "'");
}

void CsvWriter::append(const MeasurementRecord& r) {
    validate(r);
    out_ << to_csv_row(r) << '\n';
    out_.flush();
    if (!out_) throw IoError("write failed: '" + path_.string() + "'");
}

void write_csv(std::span<const MeasurementRecord> records, const std::filesystem::path& path) {
    CsvWriter w(path);
    for (const auto& r : records) w.append(r);
}

std::vector<MeasurementRecord> parse_csv(std::istream& in, const std::string& name) {
    std::vector<MeasurementRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line_no == 1) {
            if (line != kCsvHeader) throw ParseError(name, 1, "unexpected header '" + line + "'");
            continue;
        }
        if (line.empty()) continue;
        records.push_back(parse_csv_row(line, name, line_no));
    }
    if (line_no == 0) throw ParseError(name, 1, "empty file (missing header)");
    return records;
}

std::vector<MeasurementRecord> parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    return parse_csv(in, path.string());
}

// ---------------------------------------------------------------------------

void TimingSeries::validate() const {
    if (points.empty()) throw ConfigError("series '" + label + "' has no points");
    for (std::size_t i = 1; i < points.size(); ++i)
        if (points[i].size <= points[i - 1].size)
            throw ConfigError("series '" + label + "' sizes are not strictly increasing");
}

TimingSeries extract_series(std::span<const MeasurementRecord> records, std::string_view label,
                            std::optional<std::string_view> component) {
    TimingSeries s;
    s.label = std::string(label);
    for (const auto& r : records) {
        if (component && r.component != *component) continue;
        if (series_label(r) != label) continue;
        s.points.push_back({r.size, r.mean_ns.ns()});
    }
    std::sort(s.points.begin(), s.points.end(), [](auto& x, auto& y) { return x.size < y.size; });
    return s;
}

std::vector<std::string> series_labels(std::span<const MeasurementRecord> records) {
    std::vector<std::string> labels;
    for (const auto& r : records) {
        auto l = series_label(r);
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(std::move(l));
    }
    return labels;
}

// ---------------------------------------------------------------------------

CrossingReport find_crossings(const TimingSeries& a, const TimingSeries& b) {
    require_same_grid(a, b);
    const std::size_t n = a.points.size();
    std::vector<int> signs(n);
    for (std::size_t i = 0; i < n; ++i) signs[i] = sign_of(a.points[i].mean_ns - b.points[i].mean_ns);

    // Leading ties adopt the first non-zero sign; later ties carry forward.
    int carried = 0;
    for (int s : signs)
        if (s != 0) {
            carried = s;
            break;
        }
    if (carried == 0) return {};
    for (auto& s : signs) {
        if (s == 0)
            s = carried;
        else
            carried = s;
    }

    CrossingReport report;
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (signs[i] != signs[i + 1]) report.crossings.push_back({a.points[i].size, a.points[i + 1].size});
    return report;
}

// ---------------------------------------------------------------------------

BestKReport select_best_k(std::span<const std::pair<std::uint32_t, TimingSeries>> series_by_k) {
    if (series_by_k.empty()) throw ConfigError("select_best_k: no series given");
    for (const auto& [k, s] : series_by_k) require_same_grid(series_by_k.front().second, s);

    const std::size_t n_points = series_by_k.front().second.points.size();
    const std::size_t n_series = series_by_k.size();

    std::vector<double> envelope(n_points);
    std::vector<std::size_t> winner(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < n_series; ++j) {
            const double v = series_by_k[j].second.points[i].mean_ns;
            const double cur = series_by_k[best].second.points[i].mean_ns;
            if (v < cur || (v == cur && series_by_k[j].first < series_by_k[best].first)) best = j;
        }
        winner[i] = best;
        envelope[i] = series_by_k[best].second.points[i].mean_ns;
    }

    BestKReport report;
    for (std::size_t j = 0; j < n_series; ++j) {
        const auto& [k, s] = series_by_k[j];
        KScore score;
        score.k = k;
        double lo = 0, hi = 0;
        bool any = false;
        for (std::size_t i = 0; i < n_points; ++i) {
            score.total_ns += s.points[i].mean_ns;
            if (winner[i] == j) ++score.wins;
            if (envelope[i] > 0) {
                const double r = s.points[i].mean_ns / envelope[i];
                lo = any ? std::min(lo, r) : r;
                hi = any ? std::max(hi, r) : r;
                any = true;
            }
        }
        score.spike_ratio = any ? hi / lo : 1.0;
        report.ranking.push_back(score);
    }
    std::sort(report.ranking.begin(), report.ranking.end(), [](const KScore& x, const KScore& y) {
        if (x.total_ns != y.total_ns) return x.total_ns < y.total_ns;
        return x.k < y.k;
    });
    report.best_k = report.ranking.front().k;
    return report;
}

// ---------------------------------------------------------------------------

ComparisonReport compare_series(const TimingSeries& a, const TimingSeries& b) {
    require_same_grid(a, b);
    ComparisonReport report;
    double wins = 0;
    double log_sum = 0;
    std::size_t defined = 0;
    for (std::size_t i = 0; i < a.points.size(); ++i) {
        RatioRow row;
        row.size = a.points[i].size;
        row.a_ns = a.points[i].mean_ns;
        row.b_ns = b.points[i].mean_ns;
        if (row.b_ns > 0) {
            row.ratio = row.a_ns / row.b_ns;
            if (*row.ratio > 0) {
                log_sum += std::log(*row.ratio);
                ++defined;
            }
        }
        if (row.a_ns < row.b_ns) {
            row.winner = Winner::A;
            wins += 1.0;
        } else if (row.a_ns > row.b_ns) {
            row.winner = Winner::B;
        } else {
            row.winner = Winner::Tie;
            wins += 0.5;
        }
        report.rows.push_back(row);
    }
    report.a_win_fraction = wins / static_cast<double>(report.rows.size());
    if (defined > 0) report.geometric_mean = std::exp(log_sum / static_cast<double>(defined));
    return report;
}

// ---------------------------------------------------------------------------

namespace {

struct PlotTable {
    std::vector<std::string> columns;
    std::map<std::uint64_t, std::vector<std::optional<MeanNs>>> rows;

    std::size_t column(const std::string& name) {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it != columns.end()) return static_cast<std::size_t>(it - columns.begin());
        columns.push_back(name);
        return columns.size() - 1;
    }

    void set(std::uint64_t size, std::size_t col, MeanNs v) {
        auto& row = rows[size];
        if (row.size() <= col) row.resize(col + 1);
        row[col] = v;
    }
};

void write_table(const PlotTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << "# size";
    for (const auto& c : t.columns) out << ' ' << c;
    out << '\n';
    for (const auto& [size, cells] : t.rows) {
        out << size;
        for (std::size_t c = 0; c < t.columns.size(); ++c) {
            out << ' ';
            if (c < cells.size() && cells[c])
                out << cells[c]->to_string();
            else
                out << "NaN";
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed: '" + path.string() + "'");
}

}  // namespace

std::vector<std::filesystem::path> emit_plot_data(std::span<const MeasurementRecord> records,
                                                  const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());

    std::vector<std::string> components;
    for (const auto& r : records)
        if (std::find(components.begin(), components.end(), r.component) == components.end())
            components.push_back(r.component);
    const bool multi = components.size() > 1;

    // Table name -> table, in first-seen order.
    std::vector<std::pair<std::string, PlotTable>> tables;
    auto table_for = [&](const std::string& name) -> PlotTable& {
        for (auto& [n, t] : tables)
            if (n == name) return t;
        tables.emplace_back(name, PlotTable{});
        return tables.back().second;
    };

    for (const auto& r : records) {
        if (r.family == Family::DictOps) {
            std::string name = std::string(to_label(r.family)) + "_" + r.algorithm + "_" +
                               std::string(to_label(r.operation.value_or(Operation::Insert)));
            auto& t = table_for(name);
            t.set(r.size, t.column(r.component), r.mean_ns);
        } else {
            auto& t = table_for(std::string(to_label(r.family)));
            const auto col = multi ? r.component + "/" + series_label(r) : series_label(r);
            t.set(r.size, t.column(col), r.mean_ns);
        }
    }

    std::vector<std::filesystem::path> written;
    for (const auto& [name, t] : tables) {
        auto path = dir / (name + ".dat");
        write_table(t, path);
        written.push_back(std::move(path));
    }
    return written;
}

}  // namespace langbench
