#include "langbench/cli.hpp"

#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "langbench/error.hpp"
#include "langbench/report.hpp"
#include "test_util.hpp"

using namespace langbench;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

// Drops the mean_ns column.
std::string without_means(const std::string& csv) {
    std::string out;
    for (const auto& l : lines_of(csv)) out += l.substr(0, l.rfind(',')) + "\n";
    return out;
}

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream(p, std::ios::binary) << text;
}

}  // namespace

TEST_CASE("grid specs") {
    CHECK(parse_grid("100:1000:100").size() == 10);
    CHECK(parse_grid("100:1000:100").back() == 1000);
    CHECK(parse_grid("250:10000:750") ==
          std::vector<std::uint64_t>{250, 1000, 1750, 2500, 3250, 4000, 4750, 5500, 6250, 7000, 7750, 8500, 9250, 10000});
    CHECK(parse_grid("1000,5000,10000") == std::vector<std::uint64_t>{1000, 5000, 10000});
    CHECK(parse_grid("42") == std::vector<std::uint64_t>{42});
    CHECK(parse_grid("5:5:1") == std::vector<std::uint64_t>{5});
    CHECK_THROWS_AS(parse_grid("0:10:1"), ConfigError);
    CHECK_THROWS_AS(parse_grid("10:1:1"), ConfigError);
    CHECK_THROWS_AS(parse_grid("1:10:0"), ConfigError);
    CHECK_THROWS_AS(parse_grid("1:10"), ConfigError);
    CHECK_THROWS_AS(parse_grid("3,2"), ConfigError);
    CHECK_THROWS_AS(parse_grid("a"), ConfigError);
    CHECK_THROWS_AS(parse_grid(""), ConfigError);
}

TEST_CASE("u64 parsing") {
    CHECK(parse_u64("0") == 0);
    CHECK(parse_u64("0xDEADBEEF") == 0xDEADBEEFULL);
    CHECK(parse_u64("18446744073709551615") == ~0ULL);
    CHECK_THROWS_AS(parse_u64("18446744073709551616"), ConfigError);
    CHECK_THROWS_AS(parse_u64("-1"), ConfigError);
    CHECK_THROWS_AS(parse_u64("0x"), ConfigError);
}

TEST_CASE("run sort-crossover with the default grid") {
    const auto dir = testing::scratch_dir("cli_run");
    const auto out = (dir / "r.csv").string();
    const auto plots = (dir / "plots").string();
    const auto r = cli({"run", "--family", "sort-crossover", "--probes", "10", "--seed", "1", "--out", out,
                        "--plot-dir", plots});
    REQUIRE(r.code == 0);
    CHECK(lines_of(testing::slurp(out)).size() == 81);
    CHECK(std::filesystem::exists(dir / "plots" / "sort-crossover.dat"));
    CHECK(r.err.find("sink 0x") != std::string::npos);
}

TEST_CASE("run dict-ops with an explicit grid") {
    const auto dir = testing::scratch_dir("cli_dict");
    const auto out = (dir / "d.csv").string();
    const auto r = cli({"run", "--family", "dict-ops", "--sizes", "100:1000:100", "--probes", "5", "--out", out,
                        "--component-label", "cxx"});
    REQUIRE(r.code == 0);
    const auto records = parse_csv(std::filesystem::path(out));
    CHECK(records.size() == 40);
    CHECK(records.front().component == "cxx");
}

TEST_CASE("identical flags give identical files apart from timings") {
    const auto dir = testing::scratch_dir("cli_repeat");
    const std::vector<std::string> base{"run", "--family", "hybrid-sweep", "--sizes", "250:1000:250",
                                        "--probes", "3", "--thresholds", "16,128", "--seed", "0x2A"};
    auto a = base, b = base;
    a.insert(a.end(), {"--out", (dir / "a.csv").string()});
    b.insert(b.end(), {"--out", (dir / "b.csv").string()});
    REQUIRE(cli(a).code == 0);
    REQUIRE(cli(b).code == 0);
    const auto ta = testing::slurp(dir / "a.csv");
    CHECK(without_means(ta) == without_means(testing::slurp(dir / "b.csv")));
    CHECK(lines_of(ta).size() == 1 + 4 * 4);
}

TEST_CASE("usage errors exit non-zero") {
    CHECK(cli({}).code != 0);
    CHECK(cli({"run"}).code != 0);  // missing --family
    CHECK(cli({"run", "--family", "bogus"}).code != 0);
    CHECK(cli({"run", "--family", "dict-ops", "--probes", "0"}).code != 0);
    CHECK(cli({"run", "--family", "dict-ops", "--sizes", "10:1:1"}).code != 0);
    CHECK(cli({"run", "--family", "dict-ops", "--thresholds", "16"}).code != 0);
    CHECK(cli({"run", "--family", "hybrid-sweep", "--thresholds", "0"}).code != 0);
    CHECK(cli({"run", "--family", "dict-ops", "--seed", "nope"}).code != 0);
    CHECK(cli({"analyze"}).code != 0);
    CHECK(cli({"frobnicate"}).code != 0);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("unwritable output exits non-zero") {
    const auto r = cli({"run", "--family", "dict-ops", "--sizes", "10", "--probes", "1", "--out",
                        "/nonexistent/dir/x.csv"});
    CHECK(r.code != 0);
    CHECK(r.err.find("/nonexistent/dir/x.csv") != std::string::npos);
}

TEST_CASE("verify passes on the shipped fixtures") {
    const auto r = cli({"verify"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify: 48 checks, 0 failures") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    // Output is deterministic, so two components can diff it directly.
    CHECK(cli({"verify"}).out == r.out);
}

TEST_CASE("verify fails on an edited fixture") {
    const auto dir = testing::scratch_dir("cli_verify");
    for (const auto& e : std::filesystem::directory_iterator(testing::fixture_dir()))
        std::filesystem::copy_file(e.path(), dir / e.path().filename());
    auto text = testing::slurp(dir / "prng_known_answers.csv");
    const auto pos = text.find("0xe220a8397b1dcdaf");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 18, "0xe220a8397b1dcdae");
    write_text(dir / "prng_known_answers.csv", text);

    const auto r = cli({"verify", "--fixtures", dir.string()});
    CHECK(r.code != 0);
    CHECK(r.out.find("FAIL prng_known_answers.csv:2") != std::string::npos);
    CHECK(r.out.find("1 failures") != std::string::npos);

    std::filesystem::remove(dir / "probe_checksums.csv");
    CHECK(cli({"verify", "--fixtures", dir.string()}).code != 0);
    CHECK(cli({"verify", "--fixtures", (dir / "missing").string()}).code != 0);
}

TEST_CASE("analyze crossover") {
    const auto dir = testing::scratch_dir("cli_cross");
    const std::string h = std::string(kCsvHeader) + "\n";
    write_text(dir / "insertion.csv", h + "sort-crossover,cpp,insertion_sort,,,100,1,1.000\n"
                                          "sort-crossover,cpp,insertion_sort,,,200,1,2.000\n"
                                          "sort-crossover,cpp,insertion_sort,,,300,1,5.000\n");
    write_text(dir / "merge.csv", h + "sort-crossover,cpp,merge_sort,,,100,1,3.000\n"
                                      "sort-crossover,cpp,merge_sort,,,200,1,3.000\n"
                                      "sort-crossover,cpp,merge_sort,,,300,1,3.000\n");
    auto r = cli({"analyze", "crossover", "--a", (dir / "insertion.csv").string(), "--b",
                  (dir / "merge.csv").string(), "--out", (dir / "x.csv").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out == "crossings of insertion_sort vs merge_sort: 1\n  between 200 and 300\n");
    CHECK(testing::slurp(dir / "x.csv") == "size_lo,size_hi\n200,300\n");

    // Same data from a single file with the default series pair.
    write_text(dir / "both.csv", testing::slurp(dir / "insertion.csv") +
                                     testing::slurp(dir / "merge.csv").substr(h.size()));
    r = cli({"analyze", "crossover", "--in", (dir / "both.csv").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("between 200 and 300") != std::string::npos);

    // Ambiguous series without a selector.
    CHECK(cli({"analyze", "crossover", "--a", (dir / "both.csv").string(), "--b", (dir / "merge.csv").string()})
              .code != 0);

    // Parse errors name the file and line.
    write_text(dir / "broken.csv", h + "sort-crossover,cpp,merge_sort,,,100,1,3\n");
    r = cli({"analyze", "crossover", "--a", (dir / "broken.csv").string(), "--b", (dir / "merge.csv").string()});
    CHECK(r.code != 0);
    CHECK(r.err.find("broken.csv:2") != std::string::npos);
}

TEST_CASE("analyze best-k") {
    const auto dir = testing::scratch_dir("cli_bestk");
    std::string text = std::string(kCsvHeader) + "\n";
    const std::uint32_t ks[] = {16, 32, 64, 128, 256, 512};
    for (std::uint64_t size : {250, 500})
        for (auto k : ks) {
            const auto mean = k == 128 ? 1 : k;  // 128 is fastest everywhere
            text += "hybrid-sweep,cpp,hybrid_sort," + std::to_string(k) + ",," + std::to_string(size) + ",1," +
                    std::to_string(mean * size) + ".000\n";
        }
    text += "hybrid-sweep,cpp,merge_sort,,,250,1,9.000\nhybrid-sweep,cpp,merge_sort,,,500,1,9.000\n";
    write_text(dir / "sweep.csv", text);
    const auto r = cli({"analyze", "best-k", "--in", (dir / "sweep.csv").string(), "--out",
                        (dir / "rank.csv").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("best K: 128") != std::string::npos);
    const auto rank = lines_of(testing::slurp(dir / "rank.csv"));
    REQUIRE(rank.size() == 7);
    CHECK(rank[1].starts_with("128,"));
    CHECK(rank[2].starts_with("16,"));
}

TEST_CASE("analyze compare over two component files") {
    const auto dir = testing::scratch_dir("cli_compare");
    const auto a = (dir / "primary.csv").string();
    const auto b = (dir / "mirror.csv").string();
    REQUIRE(cli({"run", "--family", "sort-crossover", "--sizes", "100:1000:100", "--probes", "2", "--out", a})
                .code == 0);
    REQUIRE(cli({"run", "--family", "sort-crossover", "--sizes", "100:1000:100", "--probes", "2", "--out", b,
                 "--component-label", "mirror"})
                .code == 0);
    const auto r = cli({"analyze", "compare", "--a", a, "--b", b, "--out", (dir / "ratios.csv").string()});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("series insertion_sort") != std::string::npos);
    CHECK(r.out.find("series merge_sort") != std::string::npos);
    CHECK(lines_of(testing::slurp(dir / "ratios.csv")).size() == 1 + 2 * 10);

    const auto one = cli({"analyze", "compare", "--a", a, "--b", b, "--series", "merge_sort"});
    REQUIRE(one.code == 0);
    CHECK(one.out.find("insertion_sort") == std::string::npos);
}

TEST_CASE("the executable reports exit codes") {
    const std::string bin = LANGBENCH_BINARY;
    CHECK(std::system((bin + " verify > /dev/null").c_str()) == 0);
    CHECK(std::system((bin + " run > /dev/null 2>&1").c_str()) != 0);
}
