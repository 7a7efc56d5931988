#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "tsptw/instance.hpp"
#include "tsptw/rng.hpp"
#include "tsptw/time.hpp"

namespace testsupport {

using tsptw::Instance;
using tsptw::Route;
using tsptw::TimeInstant;

inline Instance make_instance(int n, std::int64_t horizon,
                              const std::vector<std::vector<std::int64_t>>& travel,
                              const std::vector<std::pair<std::int64_t, std::int64_t>>& windows,
                              const std::string& name = "test") {
    Instance inst;
    inst.n = n;
    inst.horizon = TimeInstant::of(horizon);
    inst.scale = 0;
    inst.name = name;
    const std::size_t m = static_cast<std::size_t>(n + 2);
    inst.travel.assign(m, std::vector<TimeInstant>(m, TimeInstant::zero()));
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w) inst.travel[v][w] = TimeInstant::of(travel[v][w]);
    inst.window_open.resize(m);
    inst.window_close.resize(m);
    for (std::size_t v = 0; v < m; ++v) {
        inst.window_open[v] = TimeInstant::of(windows[v].first);
        inst.window_close[v] = TimeInstant::of(windows[v].second);
    }
    inst.validate();
    return inst;
}

// Two customers, symmetric distances, v1 with a tight window: the only
// feasible order is 0,1,2,3.
inline Instance e2() {
    return make_instance(2, 20,
                         {{0, 2, 5, 10},  //
                          {2, 0, 2, 5},   //
                          {5, 2, 0, 2},   //
                          {10, 5, 2, 0}},
                         {{0, 20}, {3, 6}, {0, 10}, {0, 20}}, "e2");
}

// Direct restatement of the arrival recurrence used as the reference for
// the model evaluation helpers.
inline std::int64_t naive_arrival(const Instance& inst, const std::vector<int>& seq, std::int64_t t) {
    if (t < inst.open(seq.front()).units()) return INT64_MAX;
    std::int64_t visit = t;
    if (visit > inst.close(seq.front()).units()) return INT64_MAX;
    for (std::size_t i = 1; i < seq.size(); ++i) {
        visit = std::max(visit + inst.tau(seq[i - 1], seq[i]).units(), inst.open(seq[i]).units());
        if (visit > inst.close(seq[i]).units()) return INT64_MAX;
    }
    return visit;
}

// Scan oracles over the whole integer departure grid.
inline std::int64_t scan_latest_departure(const Instance& inst, const std::vector<int>& seq,
                                          std::int64_t target) {
    for (std::int64_t t = inst.horizon.units(); t >= 0; --t)
        if (naive_arrival(inst, seq, t) == target) return t;
    return INT64_MIN;
}

inline std::pair<std::int64_t, std::int64_t> scan_duration(const Instance& inst,
                                                           const std::vector<int>& seq) {
    std::int64_t best = INT64_MAX, best_t = INT64_MIN;
    for (std::int64_t t = 0; t <= inst.horizon.units(); ++t) {
        std::int64_t arr = naive_arrival(inst, seq, t);
        if (arr == INT64_MAX) continue;
        if (arr - t <= best) {
            best = arr - t;
            best_t = t;
        }
    }
    return {best, best_t};
}

// Minimum arrival at `to` over every feasible partial route from `from`
// departing a(from), enumerated over all intermediate vertex sets and
// orders.  Reference for the EAT bound.
inline std::int64_t enum_eat(const Instance& inst, int from, int to) {
    const int m = inst.vertex_count();
    std::int64_t best = from == to ? inst.open(from).units() : INT64_MAX;
    std::vector<int> others;
    for (int v = 0; v < m; ++v)
        if (v != from) others.push_back(v);

    std::vector<int> stack;
    auto dfs = [&](auto&& self, std::int64_t visit, int at, std::uint32_t used) -> void {
        if (at == to) best = std::min(best, visit);
        for (std::size_t i = 0; i < others.size(); ++i) {
            if (used & (1u << i)) continue;
            int next = others[i];
            std::int64_t nv = std::max(visit + inst.tau(at, next).units(), inst.open(next).units());
            if (nv > inst.close(next).units()) continue;
            self(self, nv, next, used | (1u << i));
        }
    };
    if (from != to) dfs(dfs, inst.open(from).units(), from, 0);
    return best;
}

// Latest visit time at `from` from which `to` is still reachable by b(to);
// reference for the LDT bound.
inline std::int64_t enum_ldt(const Instance& inst, int from, int to) {
    if (from == to) return inst.close(from).units();
    for (std::int64_t t = inst.close(from).units(); t >= inst.open(from).units(); --t) {
        // Reachable from `from` departing exactly t?  Reuse enum_eat on a
        // copy with the window of `from` pinned to [t, t].
        Instance pinned = inst;
        pinned.window_open[static_cast<std::size_t>(from)] = TimeInstant::of(t);
        pinned.window_close[static_cast<std::size_t>(from)] = TimeInstant::of(t);
        if (enum_eat(pinned, from, to) != INT64_MAX) return t;
    }
    return INT64_MIN;
}

// Raw random family with a feasible/infeasible mix: asymmetric travel times
// in [1, max_tau], customer windows as random subranges of [0, T].
inline Instance random_instance(tsptw::SplitMix64& rng, int n, std::int64_t max_tau, std::int64_t horizon,
                                const std::string& name = "rand") {
    const std::size_t m = static_cast<std::size_t>(n + 2);
    std::vector<std::vector<std::int64_t>> travel(m, std::vector<std::int64_t>(m, 0));
    for (std::size_t v = 0; v < m; ++v)
        for (std::size_t w = 0; w < m; ++w)
            if (v != w) travel[v][w] = 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(max_tau - 1)));
    std::vector<std::pair<std::int64_t, std::int64_t>> windows(m, {0, horizon});
    for (int v = 1; v <= n; ++v) {
        std::int64_t a = static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(horizon)));
        std::int64_t b = a + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(horizon - a)));
        windows[static_cast<std::size_t>(v)] = {a, b};
    }
    return make_instance(n, horizon, travel, windows, name);
}

inline Route route_of(std::initializer_list<int> v) { return Route(std::vector<int>(v)); }

inline std::vector<int> complete_seq(const Instance& inst, std::vector<int> order) {
    std::vector<int> seq{0};
    seq.insert(seq.end(), order.begin(), order.end());
    seq.push_back(inst.end_depot());
    return seq;
}

}  // namespace testsupport
