#include "tsptw/model.hpp"

#include <algorithm>
#include <cassert>

namespace tsptw {

std::vector<TimeInstant> arrival_profile(const Instance& inst, const Route& r, TimeInstant t) {
    assert(!r.vertices.empty() && t.finite());
    std::vector<TimeInstant> out;
    out.reserve(r.vertices.size());
    TimeInstant visit = std::max(t, inst.open(r.vertices.front()));
    out.push_back(visit);
    for (std::size_t i = 1; i < r.vertices.size(); ++i) {
        visit = std::max(visit + inst.tau(r.vertices[i - 1], r.vertices[i]), inst.open(r.vertices[i]));
        out.push_back(visit);
    }
    return out;
}

TimeInstant arrival_time(const Instance& inst, const Route& r, TimeInstant t) {
    assert(!r.vertices.empty());
    if (t < inst.open(r.vertices.front())) return TimeInstant::plus_inf();
    TimeInstant visit = t;
    if (visit > inst.close(r.vertices.front())) return TimeInstant::plus_inf();
    for (std::size_t i = 1; i < r.vertices.size(); ++i) {
        visit = std::max(visit + inst.tau(r.vertices[i - 1], r.vertices[i]), inst.open(r.vertices[i]));
        if (visit > inst.close(r.vertices[i])) return TimeInstant::plus_inf();
    }
    return visit;
}

TimeInstant latest_departure_within(const Instance& inst, const Route& r, TimeInstant t) {
    assert(!r.vertices.empty());
    // Backward pass: lat is the latest visit time at position i that keeps
    // every later window and the target arrival reachable.
    const auto& seq = r.vertices;
    TimeInstant lat = std::min(t, inst.close(seq.back()));
    if (lat < inst.open(seq.back())) return TimeInstant::minus_inf();
    for (std::size_t i = seq.size() - 1; i > 0; --i) {
        lat = std::min(lat - inst.tau(seq[i - 1], seq[i]), inst.close(seq[i - 1]));
        if (lat < inst.open(seq[i - 1])) return TimeInstant::minus_inf();
    }
    return std::min(lat, inst.horizon);
}

TimeInstant latest_departure(const Instance& inst, const Route& r, TimeInstant t) {
    if (t < TimeInstant::zero() || t > inst.horizon) return TimeInstant::minus_inf();
    TimeInstant dep = latest_departure_within(inst, r, t);
    if (!dep.finite()) return TimeInstant::minus_inf();
    // The pass yields the latest departure arriving at most t; waiting can
    // leave the actual arrival short of t, in which case no departure hits
    // t exactly (arrival is nondecreasing and moves in steps of at most 1).
    return arrival_time(inst, r, dep) == t ? dep : TimeInstant::minus_inf();
}

std::pair<TimeInstant, TimeInstant> duration_of(const Instance& inst, const Route& r) {
    // arrival(t) - t is nonincreasing over feasible departures, so the
    // minimum duration sits at the latest feasible departure.
    TimeInstant dep = latest_departure_within(inst, r, inst.horizon);
    if (!dep.finite()) return {TimeInstant::plus_inf(), TimeInstant::minus_inf()};
    TimeInstant arr = arrival_time(inst, r, dep);
    assert(arr.finite());
    return {arr - dep, dep};
}

Instance reverse(const Instance& inst) {
    const int m = inst.vertex_count();
    // rho swaps the depot labels and fixes the customers.
    auto rho = [&inst, m](int v) {
        if (v == 0) return m - 1;
        if (v == m - 1) return 0;
        return v;
    };
    Instance out;
    out.n = inst.n;
    out.horizon = inst.horizon;
    out.scale = inst.scale;
    out.name = inst.name;
    out.travel.assign(m, std::vector<TimeInstant>(m, TimeInstant::zero()));
    out.window_open.resize(m);
    out.window_close.resize(m);
    for (int x = 0; x < m; ++x) {
        out.window_open[x] = inst.horizon - inst.close(rho(x));
        out.window_close[x] = inst.horizon - inst.open(rho(x));
        for (int y = 0; y < m; ++y) out.travel[x][y] = inst.tau(rho(y), rho(x));
    }
    return out;
}

Route map_route_from_reverse(const Instance& inst, const Route& r) {
    const int m = inst.vertex_count();
    Route out;
    out.vertices.reserve(r.vertices.size());
    for (auto it = r.vertices.rbegin(); it != r.vertices.rend(); ++it) {
        int v = *it;
        if (v == 0) v = m - 1;
        else if (v == m - 1) v = 0;
        out.vertices.push_back(v);
    }
    return out;
}

}  // namespace tsptw
