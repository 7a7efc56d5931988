#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "tsptw/instance.hpp"
#include "tsptw/time.hpp"

namespace tsptw {

enum class SolveStatus { Optimal, Infeasible, TimeLimit, MemoryLimit };

const char* to_string(SolveStatus s);

struct SearchStats {
    std::uint64_t labels_created = 0;
    std::uint64_t labels_dominated = 0;
    std::uint64_t labels_pruned = 0;

    SearchStats& operator+=(const SearchStats& o) {
        labels_created += o.labels_created;
        labels_dominated += o.labels_dominated;
        labels_pruned += o.labels_pruned;
        return *this;
    }
};

// Resource caps for one solve.  The memory cap bounds the label arena.
struct Limits {
    std::optional<std::chrono::milliseconds> time_limit;
    std::uint64_t memory_limit_bytes = std::uint64_t{4096} << 20;

    static Limits with_seconds(double seconds) {
        Limits l;
        l.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
        return l;
    }
};

// Running view of Limits with an absolute deadline, shared by nested solves.
struct Budget {
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::uint64_t memory_limit_bytes = 0;

    static Budget start(const Limits& limits) {
        Budget b;
        if (limits.time_limit) b.deadline = std::chrono::steady_clock::now() + *limits.time_limit;
        b.memory_limit_bytes = limits.memory_limit_bytes;
        return b;
    }

    bool out_of_time() const {
        return deadline && std::chrono::steady_clock::now() >= *deadline;
    }
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Route> route;
    std::optional<TimeInstant> objective;
    SearchStats stats;
    std::chrono::milliseconds elapsed{0};
};

}  // namespace tsptw
