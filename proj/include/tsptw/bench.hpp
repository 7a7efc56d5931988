#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "tsptw/instance_io.hpp"
#include "tsptw/solve_types.hpp"

namespace tsptw {
namespace bench {

enum class BenchMode { Makespan, Duration, DurationReversed };

const char* to_string(BenchMode mode);

struct BenchRecord {
    std::string instance;
    BenchMode mode = BenchMode::Makespan;
    std::optional<SolveStatus> status;  // empty on a parse failure
    std::optional<TimeInstant> objective;
    int scale = 0;
    std::int64_t time_ms = 0;
    SearchStats stats;
    std::uint64_t makespan_calls = 0;  // duration modes only
    std::string error;                 // parse failure text
};

struct BenchSummary {
    int total = 0;
    int solved = 0;             // Optimal or proven Infeasible
    double mean_ms_solved = 0;  // over solved instances only
    std::int64_t max_ms_solved = 0;
};

struct BenchConfig {
    BenchMode mode = BenchMode::Makespan;
    Limits limits;
    io::InstanceFormat format = io::InstanceFormat::Matrix;
    int scale = 0;
};

std::string csv_header();
std::string csv_row(const BenchRecord& r);

// Solves one parsed instance under the given mode and budget.
BenchRecord run_instance(const Instance& inst, BenchMode mode, const Limits& limits);

// Runs every regular file in the directory in name order, streaming one
// record per file to the callback.  Parse failures become records, not
// errors.  Deterministic output order regardless of timing.
BenchSummary run_bench(const std::filesystem::path& directory, const BenchConfig& cfg,
                       const std::function<void(const BenchRecord&)>& emit);

}  // namespace bench
}  // namespace tsptw
