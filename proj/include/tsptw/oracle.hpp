#pragma once

#include <optional>
#include <vector>

#include "tsptw/instance.hpp"
#include "tsptw/time.hpp"

namespace tsptw {
namespace oracle {

// Reference solvers used to cross-check the search modules.  They enumerate
// exhaustively (never approximate) and deliberately re-derive the arrival
// recurrence instead of calling the evaluation helpers they are used to
// verify.  Oversized inputs are rejected with std::invalid_argument.

struct OracleResult {
    TimeInstant objective = TimeInstant::plus_inf();
    std::optional<Route> route;
    bool exhaustive = true;
};

struct DurationOracleResult {
    TimeInstant objective = TimeInstant::plus_inf();
    std::optional<Route> route;
    TimeInstant departure = TimeInstant::minus_inf();
    bool exhaustive = true;
};

// Minimum arrival over all n! customer orders departing at t0.  n <= 10.
OracleResult enumerate_makespan(const Instance& inst, TimeInstant t0);

// Same objective via subset DP over (visited set, last customer).  n <= 20.
OracleResult heldkarp_makespan(const Instance& inst, TimeInstant t0);

// Minimum of arrival - departure over all customer orders and all integer
// departures in [0, T].  n <= 8 and T <= 100000 units.
DurationOracleResult oracle_duration(const Instance& inst);

// All elementary complete routes feasible for departure 0, in lexicographic
// order.  n <= 7.
std::vector<Route> enumerate_feasible_routes(const Instance& inst);

}  // namespace oracle
}  // namespace tsptw
