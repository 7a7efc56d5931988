#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "tsptw/instance.hpp"
#include "tsptw/solve_types.hpp"

namespace tsptw {
namespace duration {

// First-improvement local search over customer positions.
struct LocalSearchConfig {
    enum class Op { Swap, TwoOpt, Shift };

    std::vector<Op> operators{Op::Swap, Op::TwoOpt, Op::Shift};
    int max_passes = 100000;  // safety cap; every accepted move strictly improves
};

struct DurationOutcome {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<Route> route;
    std::optional<TimeInstant> departure;  // t*
    std::optional<TimeInstant> duration;   // arrival - departure at t*
    std::uint64_t makespan_calls = 0;      // subordinate exact solves
    std::uint64_t windows_scanned = 0;     // departure grid points visited
    SearchStats stats;                     // aggregated over the exact solves
    std::chrono::milliseconds elapsed{0};
};

// Minimizes arrival_time(r, p) by repeated first-improving operator moves;
// never returns a worse route than r.
Route ls_min_arrival(const Instance& inst, Route r, TimeInstant p, const LocalSearchConfig& cfg);

// Maximizes the departure that still reaches arrival exactly q, over the same
// move set.  Requires arrival q to be achievable for r.
std::pair<Route, TimeInstant> ls_max_departure(const Instance& inst, Route r, TimeInstant q,
                                               const LocalSearchConfig& cfg);

struct BoundResult {
    TimeInstant value = TimeInstant::minus_inf();
    SolveStatus status = SolveStatus::Optimal;  // TimeLimit/MemoryLimit when the bound run stopped
};

// Latest departure of any elementary route, obtained by an exact makespan
// solve on the reverse network with ub = T - t_star; falls back to t_star
// when no route departs later.
BoundResult last_departure_bound(const Instance& inst, TimeInstant t_star, const Limits& limits);

// Sliding-window exact solver for the duration objective on the integer
// departure grid.  Instances at decimal scale >= 4 are refused unless
// allow_large_grid is set, since the grid then has 10^4 points per raw unit.
DurationOutcome solve_duration(const Instance& inst, const Limits& limits = {},
                               const LocalSearchConfig& cfg = {}, bool allow_large_grid = false);

// Runs solve_duration on the reverse network and maps the route and the
// departure back to inst coordinates.  The two directions explore different
// search spaces but return equal optimal durations.
DurationOutcome solve_duration_reversed(const Instance& inst, const Limits& limits = {},
                                        const LocalSearchConfig& cfg = {},
                                        bool allow_large_grid = false);

}  // namespace duration
}  // namespace tsptw
