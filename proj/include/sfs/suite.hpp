#pragma once

// Verification suite: configuration, check cells and JSONL reports.

#include "sfs/check.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sfs::suite {

/// Malformed configuration or an empty selection (exit code 2).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string_view artifact_version() noexcept;

struct CheckReport {
    std::string check;
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Pass;
    std::optional<std::uint64_t> fail_index;
    std::string detail;
    std::int64_t elapsed_ms = 0;
    std::string artifact_version;

    nlohmann::json to_json() const;
};

struct SuiteConfig {
    std::vector<std::string> checks;
    std::vector<unsigned> ks = {1, 2, 3, 4};
    std::uint64_t n = 10000;
    unsigned identity_n = 30;     // W identities checked for n <= identity_n
    unsigned enumerate_r = 10;    // exhaustive expansions of length <= r
    unsigned kernel_depth = 4;    // kernel evidence for max_a = 1..depth
    unsigned kernel_c = 2;        // distinct kernel elements c = 0..kernel_c
    std::uint64_t kernel_n = 100000; // prefix length for the distinctness check
    std::vector<std::string> slopes = {"-1,1,2,5", "2,-1,1,2", "-1,1,1,3"};
    unsigned sturmian_n_max = 50;
    std::size_t conjecture_m = 6;
    std::string out;              // empty: stdout
    unsigned jobs = 0;            // 0: OpenMP default

    /// Keys: checks, k ("1..4", [1,2] or 3), n, identity_n, enumerate_r,
    /// kernel_depth, kernel_c, kernel_n, slopes, sturmian_n_max, conjecture_m, out,
    /// jobs. Unknown keys are rejected.
    static SuiteConfig from_json(const nlohmann::json &j);
    static SuiteConfig from_file(const std::string &path);

    /// Expands "all", rejects unknown names and an empty selection.
    void validate();
};

/// "1..4", "2", "1,3".
std::vector<unsigned> parse_k_range(std::string_view text);

const std::vector<std::string> &known_checks();

struct Cell {
    std::string check;
    nlohmann::json params;
    std::function<CheckResult()> run;
};

/// One cell per (check, parameter set), in report order.
std::vector<Cell> plan(const SuiteConfig &config);

/// Runs every cell (in parallel across cells, each cell single-threaded)
/// and returns reports sorted by check name, then parameters.
std::vector<CheckReport> run_suite(const SuiteConfig &config);

/// 0 if every report passed, 1 otherwise.
int exit_code(const std::vector<CheckReport> &reports);

void write_jsonl(std::ostream &os, const std::vector<CheckReport> &reports);
void write_table(std::ostream &os, const std::vector<CheckReport> &reports);

} // namespace sfs::suite
