#pragma once

// Command orchestration shared by the CLI and the test suites. Reports are
// deterministic: identical configs produce byte-identical output (key order
// fixed, no timestamps, no randomness).

#include <cstdint>
#include <string>

#include <json.hpp>

#include "grcol/colorings.hpp"
#include "grcol/oracle.hpp"

namespace grcol::runner {

using Json = nlohmann::ordered_json;

enum class Format : std::uint8_t { json, csv, table };

struct RunConfig {
    std::uint64_t q = 0;
    int n = 0;
    int m = 0;
    colorings::Method method = colorings::Method::moore;
    bool exact = false;
    Format format = Format::json;
    std::uint64_t enum_cap = linalg::kDefaultEnumCap;
    std::size_t exact_cap = oracle::kDefaultExactCap;
    std::uint64_t node_budget = oracle::kDefaultNodeBudget;
};

struct RunResult {
    int exit_code = 0;
    Json report;
    std::string rendered; // in the requested format, newline-terminated
};

/// Exit codes: 0 ok, 1 invalid coloring (defect signal), 2 config error,
/// 3 cap/budget exceeded. Config and cap problems surface as grcol::Error;
/// exit_code_for maps them.
int exit_code_for(const Error& e);

RunResult run_color(const RunConfig& cfg);
RunResult run_bounds(const RunConfig& cfg);
RunResult run_induced(const RunConfig& cfg);
RunResult run_info(const RunConfig& cfg);

Json coloring_report_json(const colorings::ColoringReport& r);

} // namespace grcol::runner
