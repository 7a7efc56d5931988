#pragma once

#include <utility>
#include <vector>

#include "tsptw/instance.hpp"

namespace tsptw {

// Earliest arrival times along r when departing the first vertex at time t,
// waiting at window openings.  Computed for every position regardless of
// window feasibility.
std::vector<TimeInstant> arrival_profile(const Instance& inst, const Route& r, TimeInstant t);

// Earliest feasible arrival at the last vertex of r when departing at t;
// plus_inf when t < a(first) or some visit would run past its deadline.
TimeInstant arrival_time(const Instance& inst, const Route& r, TimeInstant t);

// Largest departure t' in [0, T] whose earliest arrival equals t exactly;
// minus_inf when no departure achieves arrival t (also for t outside [0, T]).
TimeInstant latest_departure(const Instance& inst, const Route& r, TimeInstant t);

// Largest departure t' in [0, T] that keeps r feasible with arrival <= t;
// minus_inf when r is infeasible for every departure.  Unlike
// latest_departure this never requires the arrival to be hit exactly, which
// is the variant the search needs for upper bounds beyond the horizon.
TimeInstant latest_departure_within(const Instance& inst, const Route& r, TimeInstant t);

// Minimum of arrival - departure over all departures, with the largest
// minimizing departure; (plus_inf, minus_inf) when r is never feasible.
std::pair<TimeInstant, TimeInstant> duration_of(const Instance& inst, const Route& r);

// Time-mirrored network: arcs reversed, window of v becomes [T-b(v), T-a(v)],
// and the depots swap labels so the result is again in standard form (start
// depot 0, end depot n+1).  Involution: reverse(reverse(inst)) == inst.
Instance reverse(const Instance& inst);

// Maps a route expressed in reverse(inst) coordinates back to inst: the
// sequence is reversed and the depot labels swapped.
Route map_route_from_reverse(const Instance& inst, const Route& r);

}  // namespace tsptw
