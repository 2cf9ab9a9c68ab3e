#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace langbench {

/// Parses a size grid: "lo:hi:step" (hi included when it lies on the grid),
/// a comma list "a,b,c", or a single size. Throws ConfigError.
std::vector<std::uint64_t> parse_grid(std::string_view spec);

/// Parses decimal or 0x-prefixed hex. Throws ConfigError.
std::uint64_t parse_u64(std::string_view text);

struct VerifySummary {
    std::size_t checks = 0;
    std::size_t failures = 0;
    bool ok() const noexcept { return checks > 0 && failures == 0; }
};

/// Re-derives every value in the fixture files under `fixture_dir` and
/// writes one line per check to `out`.
VerifySummary verify_fixtures(const std::filesystem::path& fixture_dir, std::ostream& out);

std::filesystem::path default_fixture_dir();

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace langbench
