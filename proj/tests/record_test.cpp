#include "langbench/record.hpp"

#include <doctest.h>

#include "langbench/error.hpp"

using namespace langbench;

namespace {

// Exact rational oracle: returns round-half-even(1000 * num / den) by
// comparing remainders directly in 128-bit.
std::uint64_t oracle_milli(std::uint64_t num, std::uint64_t den) {
    const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * 1000U;
    auto q = static_cast<std::uint64_t>(scaled / den);
    const auto r = static_cast<std::uint64_t>(scaled % den);
    const unsigned __int128 twice = static_cast<unsigned __int128>(r) * 2U;
    if (twice > den || (twice == den && q % 2 == 1)) ++q;
    return q;
}

}  // namespace

TEST_CASE("MeanNs rounding") {
    CHECK(MeanNs::from_total(5, 1).to_string() == "5.000");
    CHECK(MeanNs::from_total(10, 3).to_string() == "3.333");
    CHECK(MeanNs::from_total(20, 3).to_string() == "6.667");
    // Half cases go to even.
    CHECK(MeanNs::from_total(1, 2000).to_string() == "0.000");  // 0.0005
    CHECK(MeanNs::from_total(3, 2000).to_string() == "0.002");  // 0.0015
    CHECK(MeanNs::from_total(5, 2000).to_string() == "0.002");  // 0.0025
    CHECK(MeanNs::from_total(0, 7).to_string() == "0.000");
    CHECK_THROWS(MeanNs::from_total(1, 0));
}

TEST_CASE("MeanNs agrees with the rational oracle") {
    std::uint64_t x = 0x12345678;
    for (int i = 0; i < 20000; ++i) {
        x = x * 6364136223846793005ULL + 1442695040888963407ULL;
        const std::uint64_t total = x >> 20;
        const std::uint64_t count = 1 + (x % 20000);
        REQUIRE(MeanNs::from_total(total, count).milli() == oracle_milli(total, count));
    }
}

TEST_CASE("MeanNs text round trip") {
    for (std::uint64_t milli : {0ULL, 1ULL, 999ULL, 1000ULL, 123456789ULL}) {
        const auto m = MeanNs::from_milli(milli);
        const auto back = MeanNs::parse(m.to_string());
        REQUIRE(back);
        CHECK(*back == m);
    }
    CHECK_FALSE(MeanNs::parse("1.5"));
    CHECK_FALSE(MeanNs::parse("1.5000"));
    CHECK_FALSE(MeanNs::parse("-1.500"));
    CHECK_FALSE(MeanNs::parse("abc"));
    CHECK_FALSE(MeanNs::parse(".500"));
}

TEST_CASE("labels round trip") {
    for (auto f : {Family::SortCrossover, Family::HybridSweep, Family::DictOps})
        CHECK(parse_family(to_label(f)) == f);
    for (auto op : {Operation::Insert, Operation::Delete}) CHECK(parse_operation(to_label(op)) == op);
    CHECK_FALSE(parse_family("sort"));
}

TEST_CASE("series labels and validation") {
    MeasurementRecord r{Family::HybridSweep, "cpp", "hybrid_sort", 128u, std::nullopt, 250, 10, MeanNs{}};
    CHECK(series_label(r) == "hybrid_sort_k128");
    CHECK_NOTHROW(validate(r));

    r.threshold_k.reset();
    CHECK_THROWS_AS(validate(r), ConfigError);

    MeasurementRecord d{Family::DictOps, "cpp", "hash_map", std::nullopt, Operation::Delete, 100, 1, MeanNs{}};
    CHECK(series_label(d) == "hash_map_delete");
    CHECK_NOTHROW(validate(d));
    d.operation.reset();
    CHECK_THROWS_AS(validate(d), ConfigError);

    MeasurementRecord c{Family::SortCrossover, "c,pp", "merge_sort", std::nullopt, std::nullopt, 25, 1, MeanNs{}};
    CHECK_THROWS_AS(validate(c), ConfigError);
}
